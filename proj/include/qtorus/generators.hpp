#pragma once

#include <random>

#include "qtorus/algebra.hpp"

namespace qtorus {

/// Nonzero scalar s q^e with small rational s and |e_k| <= 1.
Scalar random_small_scalar(const Field& F, std::mt19937_64& rng);

/// sum_{i=0}^{d} t^i c_i with monomial c_0, c_d and sparse middle terms
/// supported in the box |b_j| <= 1 of the coefficient lattice.
Element random_unitary(const AlgebraPtr& ctx, int degree, std::mt19937_64& rng);

/// n = 2 only. t^d + sum_{0<i<d} t^i c_i + mu x1^k with gcd(k, d) = 1 and
/// every middle coefficient of x1-adic valuation above k (d - i) / d. The
/// Newton polygon is one segment without interior lattice points, so f is
/// irreducible over the division ring of fractions of F[x1^{+-1}].
Element random_irreducible_candidate(const AlgebraPtr& ctx, int degree, std::mt19937_64& rng);

/// g (t - mu x^b) with g unitary of degree - 1 >= 1.
Element random_reducible(const AlgebraPtr& ctx, int degree, std::mt19937_64& rng);

}  // namespace qtorus
