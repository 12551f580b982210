#include "qtorus/hypotheses.hpp"

namespace qtorus {

HypothesisFlags check_hypotheses(const ExponentSystem& sys) {
    HypothesisFlags h;
    std::vector<IntVec> base;
    for (int j = 0; j + 1 < sys.n; ++j) {
        IntVec e(static_cast<std::size_t>(sys.n), 0);
        e[static_cast<std::size_t>(j)] = 1;
        base.push_back(std::move(e));
    }
    h.B_commutative = is_commutative_set(base, sys);
    h.center_rank = center_lattice(sys).rank;
    h.center_trivial = h.center_rank == 0;
    h.dim = algebra_dimension(sys);
    h.dim_is_1 = h.dim.exact && h.dim.value() == 1;
    h.dim_is_n_minus_1 = h.dim.exact && h.dim.value() == sys.n - 1;
    return h;
}

BoundCheck gk_dimension_bound_check(int certified_gk, const ExponentSystem& sys) {
    BoundCheck b;
    const DimensionResult dim = algebra_dimension(sys);
    b.gk = certified_gk;
    // With bounds only, n - lower is the largest value n - dim can take.
    b.bound = sys.n - dim.lower;
    b.pass = certified_gk >= b.bound;
    b.detail = "gk = " + std::to_string(certified_gk) + (b.pass ? " >= " : " < ") + std::to_string(b.bound) +
               " = n - dim" + (dim.exact ? "" : " (dim lower bound)");
    return b;
}

}  // namespace qtorus
