#pragma once

#include <string>

#include "qtorus/lattice.hpp"

namespace qtorus {

/// Flags that gate which certifications apply, for a system already in
/// split coordinates (t last, B the first n-1 coordinates).
struct HypothesisFlags {
    bool B_commutative = false;
    bool center_trivial = false;
    bool dim_is_1 = false;
    bool dim_is_n_minus_1 = false;
    std::size_t center_rank = 0;
    DimensionResult dim;
};

HypothesisFlags check_hypotheses(const ExponentSystem& split_system);

struct BoundCheck {
    bool pass = false;
    int gk = 0;
    int bound = 0;  // n - dim, using the lower dimension bound when dim is inexact
    std::string detail;
};

/// gk(M) >= n - dim(F*A) for a module with exactly certified gk.
BoundCheck gk_dimension_bound_check(int certified_gk, const ExponentSystem& sys);

}  // namespace qtorus
