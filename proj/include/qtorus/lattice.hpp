#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtorus/int_matrix.hpp"
#include "qtorus/scalar.hpp"

namespace qtorus {

/// The multiparameters q_ij = prod_k q_k^{E^(k)_ij} (or zeta^{E_ij}).
struct ExponentSystem {
    int n = 0;
    FieldMode mode;
    std::vector<IntMatrix> E;

    int r() const { return static_cast<int>(E.size()); }
};

/// 1-based (k, i, j) of the first entry breaking antisymmetry, if any.
struct Violation {
    int k, i, j;
    std::string describe() const;
};
std::optional<Violation> find_violation(const ExponentSystem& sys);

/// Throws InvalidExponentSystem naming the offending entry.
void validate(const ExponentSystem& sys);

/// (a^T E^(k) b)_k.
IntVec pairing(const IntVec& a, const IntVec& b, const ExponentSystem& sys);

/// Whether a pairing value gives the scalar 1 (exactly, or mod m).
bool pairing_trivial(const IntVec& value, const ExponentSystem& sys);

struct Sublattice {
    std::vector<IntVec> basis;  // Hermite normal form
    std::size_t rank = 0;
    bool saturated = false;
};

/// Lattice spanned by the given vectors, in Hermite form.
Sublattice span_lattice(const std::vector<IntVec>& gens, int n);

Sublattice center_lattice(const ExponentSystem& sys);
bool is_commutative_sublattice(const Sublattice& B, const ExponentSystem& sys);
bool is_commutative_set(const std::vector<IntVec>& vecs, const ExponentSystem& sys);

struct DimensionResult {
    bool exact = false;
    int lower = 0;
    int upper = 0;
    int value() const { return lower; }
};

DimensionResult algebra_dimension(const ExponentSystem& sys);

struct IsotropicResult {
    int rank = 0;
    std::vector<IntVec> basis;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// Exhaustive search over vectors with entries in [-bound, bound].
IsotropicResult brute_force_max_isotropic(const ExponentSystem& sys, int bound,
                                          std::uint64_t budget = kDefaultSearchBudget);

/// The 2^n coordinate sublattices, by descending rank.
std::vector<Sublattice> coordinate_family(int n);

/// Change of basis: column j of P is the new j-th basis vector, and the
/// coordinate t (0-based) is moved to the last position. Returns the system
/// in the new coordinates, E' = P'^T E P'.
struct Split {
    IntMatrix P;  // includes the permutation moving t last
};
Split make_split(const IntMatrix& basis, int t);
ExponentSystem apply_split(const ExponentSystem& sys, const Split& split);

}  // namespace qtorus
