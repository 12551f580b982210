#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtorus {

/// Outcome of one randomized or exhaustive property suite. The reproducer
/// echoes the inputs of the first failure.
struct PropertyResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string reproducer;
    bool pass() const { return failures == 0; }
};

/// lambda(a1, a2) lambda(a1 + a2, a3) = lambda(a2, a3) lambda(a1, a2 + a3) on
/// random systems with n <= 4, entries <= 3, generic and root m in {2, 3, 4, 6}.
PropertyResult cocycle_property(std::uint64_t seed, int systems, int triples_per_system);

/// x^a x^b = q^{pairing(a, b)} x^b x^a as products in the algebra.
PropertyResult commutation_property(std::uint64_t seed, int pairs);

/// Left and right division reconstruct the dividend with a lower-degree
/// remainder, and reduction modulo fA satisfies alpha = f h + residue.
PropertyResult division_property(std::uint64_t seed, int cases);

/// U M V = D with unimodular U, V and d_i | d_{i+1}.
PropertyResult smith_property(std::uint64_t seed, int cases);

/// sigma^k(beta) = t^k beta t^{-k} and sigma^k is multiplicative.
PropertyResult sigma_property(std::uint64_t seed, int cases);

/// parse(format(e)) == e.
PropertyResult roundtrip_property(std::uint64_t seed, int cases);

/// algebra_dimension (exact branch) against brute_force_max_isotropic for
/// every antisymmetric E with entries in [-entry_bound, entry_bound],
/// 1 <= n <= max_n, r = 1, generic and each root order given.
PropertyResult dimension_oracle_sweep(int max_n, int entry_bound, const std::vector<int>& root_orders);

std::vector<PropertyResult> run_selftest(bool full, std::uint64_t seed);

}  // namespace qtorus
