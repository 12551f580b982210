#include "qtorus/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "qtorus/error.hpp"

namespace qtorus {

std::string Violation::describe() const {
    std::ostringstream os;
    os << "(" << k << "," << i << "," << j << ")";
    return os.str();
}

std::optional<Violation> find_violation(const ExponentSystem& sys) {
    for (int k = 0; k < sys.r(); ++k) {
        const IntMatrix& E = sys.E[static_cast<std::size_t>(k)];
        // Lower triangle first so a broken pair is named as (i, j) with i > j.
        for (int i = 0; i < sys.n; ++i)
            for (int j = 0; j <= i; ++j) {
                auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
                bool bad = (i == j) ? E(ui, uj) != 0 : E(ui, uj) != -E(uj, ui);
                if (bad) return Violation{k + 1, i + 1, j + 1};
            }
    }
    return std::nullopt;
}

void validate(const ExponentSystem& sys) {
    if (sys.n < 1) throw Error(ErrorKind::InvalidExponentSystem, "rank n must be at least 1");
    if (sys.r() < 1) throw Error(ErrorKind::InvalidExponentSystem, "at least one exponent matrix is required");
    if (sys.mode.is_root() && sys.r() != 1)
        throw Error(ErrorKind::InvalidExponentSystem, "root-of-unity mode requires exactly one exponent matrix");
    if (!sys.mode.is_root() && sys.r() != sys.mode.r)
        throw Error(ErrorKind::InvalidExponentSystem, "number of exponent matrices differs from r");
    for (const auto& E : sys.E)
        if (E.rows() != static_cast<std::size_t>(sys.n) || E.cols() != static_cast<std::size_t>(sys.n))
            throw Error(ErrorKind::InvalidExponentSystem, "exponent matrix is not n x n");
    if (auto v = find_violation(sys)) {
        const auto& E = sys.E[static_cast<std::size_t>(v->k - 1)];
        std::ostringstream os;
        os << "entry " << v->describe() << " breaks antisymmetry: E" << v->k << "[" << v->i << "][" << v->j
           << "] = " << E(static_cast<std::size_t>(v->i - 1), static_cast<std::size_t>(v->j - 1));
        if (v->i != v->j)
            os << ", E" << v->k << "[" << v->j << "][" << v->i
               << "] = " << E(static_cast<std::size_t>(v->j - 1), static_cast<std::size_t>(v->i - 1));
        throw Error(ErrorKind::InvalidExponentSystem, os.str());
    }
}

IntVec pairing(const IntVec& a, const IntVec& b, const ExponentSystem& sys) {
    if (a.size() != static_cast<std::size_t>(sys.n) || b.size() != static_cast<std::size_t>(sys.n))
        throw Error(ErrorKind::DimensionMismatch, "pairing arguments must have length n");
    IntVec out(static_cast<std::size_t>(sys.r()), 0);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = dot(a, sys.E[k] * b);
    return out;
}

bool pairing_trivial(const IntVec& value, const ExponentSystem& sys) {
    for (auto x : value)
        if (sys.mode.is_root() ? x % sys.mode.m != 0 : x != 0) return false;
    return true;
}

Sublattice span_lattice(const std::vector<IntVec>& gens, int n) {
    Sublattice s;
    s.basis = hermite_basis(gens, static_cast<std::size_t>(n));
    s.rank = s.basis.size();
    if (s.rank == 0) {
        s.saturated = true;
        return s;
    }
    auto snf = smith_normal_form(IntMatrix::from_rows(s.basis, static_cast<std::size_t>(n)));
    s.saturated = true;
    for (auto d : snf.invariant_factors())
        if (d != 0 && d != 1) s.saturated = false;
    return s;
}

Sublattice center_lattice(const ExponentSystem& sys) {
    const auto n = static_cast<std::size_t>(sys.n);
    if (!sys.mode.is_root()) {
        IntMatrix stacked(n * sys.E.size(), n);
        for (std::size_t k = 0; k < sys.E.size(); ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) stacked(k * n + i, j) = sys.E[k](i, j);
        auto snf = smith_normal_form(stacked);
        std::vector<IntVec> kernel;
        for (std::size_t j = snf.rank(); j < n; ++j) kernel.push_back(snf.V.col(j));
        return span_lattice(kernel, sys.n);
    }
    // E a = 0 mod m: with U E V = D and a = V y, need d_i y_i = 0 mod m.
    const std::int64_t m = sys.mode.m;
    auto snf = smith_normal_form(sys.E[0]);
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t d = snf.D(i, i);
        std::int64_t s = m / std::gcd(d, m);
        IntVec v = snf.V.col(i);
        for (auto& x : v) x = checked_mul(x, s);
        gens.push_back(std::move(v));
    }
    return span_lattice(gens, sys.n);
}

bool is_commutative_set(const std::vector<IntVec>& vecs, const ExponentSystem& sys) {
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = i + 1; j < vecs.size(); ++j)
            if (!pairing_trivial(pairing(vecs[i], vecs[j], sys), sys)) return false;
    return true;
}

bool is_commutative_sublattice(const Sublattice& B, const ExponentSystem& sys) {
    return is_commutative_set(B.basis, sys);
}

namespace {

bool independent(const std::vector<IntVec>& vecs) {
    if (vecs.empty()) return true;
    return rank(IntMatrix::from_rows(vecs, vecs.front().size())) == vecs.size();
}

// Largest set of standard basis vectors that pairwise commute.
int coordinate_clique(const ExponentSystem& sys) {
    int best = 0;
    const int n = sys.n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        std::vector<IntVec> vecs;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                IntVec e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(i)] = 1;
                vecs.push_back(e);
            }
        if (is_commutative_set(vecs, sys)) best = size;
    }
    return best;
}

class IsotropicSearch {
public:
    IsotropicSearch(const ExponentSystem& sys, int bound, std::uint64_t budget)
        : sys_(sys), budget_(budget) {
        const auto n = static_cast<std::size_t>(sys.n);
        IntVec v(n, -bound);
        for (;;) {
            auto first = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
            if (first != v.end() && *first > 0) vecs_.push_back(v);
            std::size_t i = 0;
            while (i < n && v[i] == bound) v[i++] = -bound;
            if (i == n) break;
            ++v[i];
        }
        std::stable_sort(vecs_.begin(), vecs_.end(), [](const IntVec& a, const IntVec& b) {
            auto norm = [](const IntVec& x) {
                std::int64_t s = 0;
                for (auto c : x) s += std::llabs(c);
                return s;
            };
            auto na = norm(a), nb = norm(b);
            return na != nb ? na < nb : a < b;
        });
        const std::size_t N = vecs_.size();
        adj_.assign(N * N, 0);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i; j < N; ++j) {
                char ok = pairing_trivial(pairing(vecs_[i], vecs_[j], sys_), sys_) ? 1 : 0;
                adj_[i * N + j] = adj_[j * N + i] = ok;
            }
    }

    IsotropicResult run() {
        std::vector<std::size_t> all(vecs_.size());
        std::iota(all.begin(), all.end(), 0);
        std::vector<IntVec> current;
        dfs(current, all);
        result_.rank = static_cast<int>(result_.basis.size());
        result_.nodes = nodes_;
        return result_;
    }

private:
    void dfs(std::vector<IntVec>& current, const std::vector<std::size_t>& cands) {
        if (++nodes_ > budget_)
            throw Error(ErrorKind::SearchSpaceTooLarge, "isotropic search exceeded its node budget");
        if (current.size() > result_.basis.size()) result_.basis = current;
        if (result_.basis.size() == static_cast<std::size_t>(sys_.n)) return;
        const std::size_t N = vecs_.size();
        for (std::size_t ci = 0; ci < cands.size(); ++ci) {
            if (current.size() + (cands.size() - ci) <= result_.basis.size()) return;
            const std::size_t c = cands[ci];
            current.push_back(vecs_[c]);
            if (independent(current)) {
                std::vector<std::size_t> next;
                for (std::size_t cj = ci + 1; cj < cands.size(); ++cj)
                    if (adj_[c * N + cands[cj]]) next.push_back(cands[cj]);
                dfs(current, next);
            }
            current.pop_back();
            if (result_.basis.size() == static_cast<std::size_t>(sys_.n)) return;
        }
    }

    const ExponentSystem& sys_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<IntVec> vecs_;
    std::vector<char> adj_;
    IsotropicResult result_;
};

}  // namespace

IsotropicResult brute_force_max_isotropic(const ExponentSystem& sys, int bound, std::uint64_t budget) {
    if (bound < 1) throw Error(ErrorKind::Config, "coefficient bound must be at least 1");
    double count = 1;
    for (int i = 0; i < sys.n; ++i) count *= 2.0 * bound + 1;
    if (count > 20000) throw Error(ErrorKind::SearchSpaceTooLarge, "too many candidate vectors for exhaustive search");
    return IsotropicSearch(sys, bound, budget).run();
}

DimensionResult algebra_dimension(const ExponentSystem& sys) {
    DimensionResult d;
    if (sys.mode.is_root()) {
        d.lower = d.upper = sys.n;
        d.exact = true;
        return d;
    }
    int upper = sys.n;
    for (const auto& E : sys.E) upper = std::min(upper, sys.n - static_cast<int>(rank(E)) / 2);
    d.upper = upper;
    if (sys.r() == 1) {
        d.lower = upper;
        d.exact = true;
        return d;
    }
    int lower = std::max(coordinate_clique(sys), static_cast<int>(center_lattice(sys).rank));
    if (lower < upper) {
        // The radical extended by one vector is still commutative.
        if (static_cast<int>(center_lattice(sys).rank) < sys.n)
            lower = std::max(lower, static_cast<int>(center_lattice(sys).rank) + 1);
    }
    if (lower < upper) {
        try {
            lower = std::max(lower, brute_force_max_isotropic(sys, sys.n <= 3 ? 2 : 1, 2'000'000).rank);
        } catch (const Error&) {
        }
    }
    d.lower = lower;
    d.exact = lower == upper;
    return d;
}

std::vector<Sublattice> coordinate_family(int n) {
    if (n < 1) throw Error(ErrorKind::DimensionMismatch, "coordinate family needs n >= 1");
    std::vector<std::uint32_t> masks((1u << n));
    std::iota(masks.begin(), masks.end(), 0u);
    // Descending rank; within a rank, subsets in lexicographic order of indices.
    auto key = [n](std::uint32_t mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        return idx;
    };
    std::stable_sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa > pb : key(a) < key(b);
    });
    std::vector<Sublattice> out;
    for (auto mask : masks) {
        std::vector<IntVec> gens;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                IntVec e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(i)] = 1;
                gens.push_back(e);
            }
        out.push_back(span_lattice(gens, n));
    }
    return out;
}

Split make_split(const IntMatrix& basis, int t) {
    const std::size_t n = basis.rows();
    if (basis.cols() != n) throw Error(ErrorKind::Config, "split basis must be square");
    if (t < 0 || static_cast<std::size_t>(t) >= n) throw Error(ErrorKind::Config, "split index t out of range");
    if (std::llabs(determinant(basis)) != 1) throw Error(ErrorKind::Config, "split basis is not unimodular");
    IntMatrix P(n, n);
    std::size_t dst = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == static_cast<std::size_t>(t)) continue;
        for (std::size_t i = 0; i < n; ++i) P(i, dst) = basis(i, j);
        ++dst;
    }
    for (std::size_t i = 0; i < n; ++i) P(i, n - 1) = basis(i, static_cast<std::size_t>(t));
    return Split{P};
}

ExponentSystem apply_split(const ExponentSystem& sys, const Split& split) {
    ExponentSystem out = sys;
    for (auto& E : out.E) E = split.P.transpose() * E * split.P;
    return out;
}

}  // namespace qtorus
