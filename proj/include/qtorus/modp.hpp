#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qtorus/scalar.hpp"

namespace qtorus {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);
u64 addmod(u64 a, u64 b, u64 p);
u64 submod(u64 a, u64 b, u64 p);
bool is_prime(u64 n);

/// Thrown when a denominator vanishes at the chosen point; callers retry
/// with another seed.
struct UnluckySpecialization {};

/// Ring homomorphism from the scalars reachable in a computation to F_p:
/// q_k -> random values (generic) or zeta -> an element of exact order m.
class Specialization {
public:
    Specialization(const FieldMode& mode, std::uint64_t seed);

    u64 prime() const { return p_; }
    const FieldMode& mode() const { return mode_; }

    u64 operator()(const Scalar& s) const;
    u64 rational(const Rational& c) const;
    u64 q_power(const std::vector<std::int64_t>& e) const;
    /// Uniform nonzero residue drawn from the internal generator.
    u64 random_unit();

private:
    u64 eval_poly(const QPoly& f) const;

    FieldMode mode_;
    u64 p_;
    std::vector<u64> q_;  // parameter values, or {omega}
    std::uint64_t state_;
};

/// Dense polynomial over F_p, constant term first, no trailing zeros.
using ModPoly = std::vector<u64>;

ModPoly modpoly_trim(ModPoly a);
ModPoly modpoly_gcd(ModPoly a, ModPoly b, u64 p);

/// Row echelon form over F_p with sparse rows keyed by 64-bit column ids.
/// Pivots are the largest key of each row.
class SparseEchelon {
public:
    using Row = std::map<u64, u64, std::greater<>>;

    explicit SparseEchelon(u64 p) : p_(p) {}

    /// Reduces v; inserts it and returns true when it is independent.
    bool insert(Row v);
    std::size_t rank() const { return pivots_.size(); }

private:
    u64 p_;
    std::map<u64, Row> pivots_;
};

/// Rank of a dense matrix over F_p.
std::size_t modp_rank(std::vector<std::vector<u64>> m, u64 p);

}  // namespace qtorus
