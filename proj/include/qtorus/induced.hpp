#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtorus/algebra.hpp"

namespace qtorus {

/// One-dimensional module over the commutative F*B, B spanned by the first
/// n-1 coordinates; values[j] is the scalar by which x_{j+1} acts.
struct Character {
    AlgebraPtr ctx;
    std::vector<Scalar> values;
};

/// W = V (x)_B A for a character V, with basis w_k = v (x) t^k and right action
///   w_k x_j = wt(k, j) w_k,  wt(k, j) = chi(x_j) q^{k <e_n, e_j>},
///   w_k t   = w_{k+1}.
class InducedModule {
public:
    using Vec = std::map<std::int64_t, Scalar>;  // finitely supported in the w_k basis

    /// Throws NonCommutativeCoefficients or ZeroCharacterValue, and
    /// InvalidExponentSystem if the relations fail on |k| <= 5.
    explicit InducedModule(Character chi);

    const AlgebraPtr& context() const { return chi_.ctx; }
    const Character& character() const { return chi_; }
    int n() const { return chi_.ctx->n(); }

    /// <e_n, e_j> for j < n - 1.
    const std::vector<IntVec>& shift_pairings() const { return shift_; }
    Scalar weight(std::int64_t k, int j) const;

    Vec basis(std::int64_t k) const { return Vec{{k, Scalar(1)}}; }
    /// v x_j^sign; j = n-1 is t.
    Vec act(const Vec& v, int j, int sign = 1) const;

    /// First failing relation on {w_k : |k| <= range}, empty when all hold.
    std::string verify_relations(int range) const;

private:
    Character chi_;
    std::vector<IntVec> shift_;
};

struct InducedVerdict {
    bool simple = false;
    std::string certificate;  // why the weights separate, or how the witness was checked
    /// Smallest m' > 0 with wt(k + m', .) = wt(k, .) for all k; absent when
    /// the weights are pairwise distinct.
    std::optional<std::int64_t> period;
    /// Witness N = span{w_{k+m'} - w_k}: closed under every generator action,
    /// nonzero, and W/N has dimension m' (the map w_k -> e_{k mod m'}).
    bool witness_closed = false;
    bool witness_proper = false;
    std::int64_t quotient_dimension = 0;
    int distinct_checked = 0;  // weights compared pairwise on |k| <= this
};

/// Weight vectors of w_k and w_k' agree iff q^{(k-k') <e_n, e_j>} = 1 for
/// every j, an exact statement on the pairing values.
InducedVerdict induced_simplicity_verdict(const InducedModule& W, int check_range = 50);

/// f(m) = dim W_0 V_0^m for m = 0..steps with W_0 = F w_0 and V_0 spanned by
/// 1 and x_j^{+-1}; every action sends a basis vector to a multiple of one,
/// so the span is tracked by support. f(m) = 2m + 1 gives gk(W) = 1.
std::vector<std::int64_t> induced_growth(const InducedModule& W, int steps);

}  // namespace qtorus
