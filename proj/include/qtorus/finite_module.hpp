#pragma once

#include <string>
#include <vector>

#include "qtorus/algebra.hpp"

namespace qtorus {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

ScalarMatrix identity_matrix(std::size_t d);
ScalarMatrix matmul(const ScalarMatrix& a, const ScalarMatrix& b);
/// Throws DivisionByZero for a singular matrix.
ScalarMatrix matinv(const ScalarMatrix& a);

/// x_j acts by X[j]; the relations read X_i X_j = q_ij X_j X_i.
struct FiniteDimModule {
    AlgebraPtr ctx;
    std::size_t dim = 0;
    std::vector<ScalarMatrix> X;
};

/// First failing relation, empty when X_i X_j = q_ij X_j X_i for all i < j.
std::string verify_relations(const FiniteDimModule& M);

/// Root of unity of order m >= 2, n = 2, E_12 = 1:
/// X_1 = scale diag(1, z, ..., z^{m-1}), X_2 = cyclic shift e_i -> e_{i+1}.
FiniteDimModule clock_shift_module(const AlgebraPtr& ctx, const Scalar& scale = Scalar(1));

FiniteDimModule direct_sum(const FiniteDimModule& a, const FiniteDimModule& b);

struct FiniteVerdict {
    enum class Kind { AbsolutelySimple, InvariantSubspace, Undecided };
    Kind kind = Kind::Undecided;
    std::size_t span_dim = 0;      // dimension of the span of words
    int word_length = 0;           // length at which the span stabilized (or the cap)
    bool stabilized = false;
    std::vector<std::vector<Scalar>> subspace;  // basis of a proper invariant subspace
    std::string describe() const;
};

/// Burnside: the module is absolutely simple iff words in X_j^{+-1} span all
/// d x d matrices. Below d^2, A' e_i for the span A' is tried as a witness.
FiniteVerdict certify_simplicity_finite(const FiniteDimModule& M, int word_length_cap = 64);

}  // namespace qtorus
