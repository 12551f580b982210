#include "qtorus/induced.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "qtorus/element_io.hpp"
#include "qtorus/error.hpp"

namespace qtorus {

namespace {

IntVec unit(int n, int j) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    return e;
}

IntVec scaled(const IntVec& v, std::int64_t k) {
    IntVec r = v;
    for (auto& x : r) x *= k;
    return r;
}

bool is_zero_vec(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::string format_vec(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

void add_to(InducedModule::Vec& v, std::int64_t k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

}  // namespace

InducedModule::InducedModule(Character chi) : chi_(std::move(chi)) {
    const int n = chi_.ctx->n();
    if (static_cast<int>(chi_.values.size()) != n - 1)
        throw Error(ErrorKind::DimensionMismatch, "a character needs one value per coefficient generator");
    std::vector<IntVec> base;
    for (int j = 0; j + 1 < n; ++j) base.push_back(unit(n, j));
    if (!is_commutative_set(base, chi_.ctx->system()))
        throw Error(ErrorKind::NonCommutativeCoefficients, "characters need a commutative coefficient ring");
    for (std::size_t j = 0; j < chi_.values.size(); ++j)
        if (chi_.values[j].is_zero())
            throw Error(ErrorKind::ZeroCharacterValue, "character value of x" + std::to_string(j + 1) + " is zero");
    for (int j = 0; j + 1 < n; ++j) shift_.push_back(chi_.ctx->pairing(unit(n, n - 1), unit(n, j)));
    const std::string bad = verify_relations(5);
    if (!bad.empty()) throw Error(ErrorKind::InvalidExponentSystem, "induced module: " + bad);
}

Scalar InducedModule::weight(std::int64_t k, int j) const {
    return chi_.values[static_cast<std::size_t>(j)] * chi_.ctx->q_power(scaled(shift_[static_cast<std::size_t>(j)], k));
}

InducedModule::Vec InducedModule::act(const Vec& v, int j, int sign) const {
    if (j < 0 || j >= n() || (sign != 1 && sign != -1))
        throw Error(ErrorKind::DimensionMismatch, "generator index out of range");
    Vec out;
    if (j == n() - 1) {
        for (const auto& [k, c] : v) out.emplace(k + sign, c);
        return out;
    }
    for (const auto& [k, c] : v) {
        const Scalar w = weight(k, j);
        add_to(out, k, c * (sign == 1 ? w : w.inverse()));
    }
    return out;
}

std::string InducedModule::verify_relations(int range) const {
    const int nn = n();
    for (std::int64_t k = -range; k <= range; ++k) {
        const Vec v = basis(k);
        for (int i = 0; i < nn; ++i) {
            if (act(act(v, i, 1), i, -1) != v)
                return "inverse relation fails for generator " + std::to_string(i + 1) + " at k = " + std::to_string(k);
            for (int j = i + 1; j < nn; ++j) {
                const Scalar qij = chi_.ctx->commutation_scalar(unit(nn, i), unit(nn, j));
                Vec rhs = act(act(v, j), i);
                for (auto& [e, c] : rhs) c *= qij;
                if (act(act(v, i), j) != rhs)
                    return "commutation relation fails for generators " + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + " at k = " + std::to_string(k);
            }
        }
    }
    return {};
}

InducedVerdict induced_simplicity_verdict(const InducedModule& W, int check_range) {
    InducedVerdict v;
    const auto& sys = W.context()->system();
    const auto& shifts = W.shift_pairings();
    const int nb = W.n() - 1;

    if (!sys.mode.is_root()) {
        for (int j = 0; j < nb; ++j)
            if (!is_zero_vec(shifts[static_cast<std::size_t>(j)])) {
                v.simple = true;
                v.certificate = "<e_n, e_" + std::to_string(j + 1) + "> = " +
                                format_vec(shifts[static_cast<std::size_t>(j)]) +
                                " is nonzero, so wt(k, " + std::to_string(j + 1) +
                                ") = wt(k', " + std::to_string(j + 1) + ") forces k = k'";
                break;
            }
        if (!v.simple) v.period = 1;
    } else {
        std::int64_t g = sys.mode.m;
        for (const auto& s : shifts) g = std::gcd(g, s[0]);
        v.period = sys.mode.m / g;
    }

    if (v.simple) {
        // Exact spot check of the lattice statement.
        std::vector<std::vector<Scalar>> wts;
        for (std::int64_t k = -check_range; k <= check_range; ++k) {
            std::vector<Scalar> row;
            for (int j = 0; j < nb; ++j) row.push_back(W.weight(k, j));
            for (std::size_t i = 0; i < wts.size(); ++i)
                if (wts[i] == row)
                    throw Error(ErrorKind::InvalidExponentSystem, "weight vectors coincide at k = " +
                                                                      std::to_string(k) + " and k = " +
                                                                      std::to_string(-check_range + static_cast<std::int64_t>(i)));
            wts.push_back(std::move(row));
        }
        v.distinct_checked = check_range;
        return v;
    }

    const std::int64_t p = *v.period;
    // N = ker(w_k -> e_{k mod p}); membership is a residue-class sum test.
    auto in_N = [p](const InducedModule::Vec& x) {
        std::map<std::int64_t, Scalar> sums;
        for (const auto& [k, c] : x) sums[((k % p) + p) % p] += c;
        return std::all_of(sums.begin(), sums.end(), [](const auto& s) { return s.second.is_zero(); });
    };
    bool closed = true;
    for (std::int64_t k = -2 * p - 2; k <= 2 * p + 2 && closed; ++k) {
        InducedModule::Vec gen{{k + p, Scalar(1)}, {k, Scalar(-1)}};
        if (!in_N(gen)) closed = false;
        for (int j = 0; j <= nb && closed; ++j)
            for (int s : {1, -1})
                if (!in_N(W.act(gen, j, s))) closed = false;
    }
    v.witness_closed = closed;
    // w_0 .. w_{p-1} map to a basis of F^p, and w_p - w_0 is a nonzero element of N.
    v.quotient_dimension = p;
    v.witness_proper = closed && !in_N(W.basis(0));
    v.certificate = "weights have period " + std::to_string(p) + "; N = span{w_(k+" + std::to_string(p) +
                    ") - w_k} is closed under all " + std::to_string(2 * W.n()) +
                    " generator actions and W/N has dimension " + std::to_string(p);
    return v;
}

std::vector<std::int64_t> induced_growth(const InducedModule& W, int steps) {
    std::set<std::int64_t> reached{0};
    std::vector<std::int64_t> dims{1};
    for (int m = 1; m <= steps; ++m) {
        std::set<std::int64_t> next = reached;
        for (const std::int64_t k : reached)
            for (int j = 0; j < W.n(); ++j)
                for (const int sign : {1, -1})
                    for (const auto& [idx, c] : W.act(W.basis(k), j, sign))
                        if (!c.is_zero()) next.insert(idx);
        reached = std::move(next);
        dims.push_back(static_cast<std::int64_t>(reached.size()));
    }
    return dims;
}

}  // namespace qtorus
