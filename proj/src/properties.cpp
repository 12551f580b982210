#include "qtorus/properties.hpp"

#include <random>
#include <sstream>

#include "qtorus/element_io.hpp"
#include "qtorus/error.hpp"
#include "qtorus/generators.hpp"
#include "qtorus/skew.hpp"

namespace qtorus {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

IntMatrix random_antisymmetric(std::mt19937_64& rng, int n, int bound) {
    IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            m(i, j) = uniform(rng, -bound, bound);
            m(j, i) = -m(i, j);
        }
    return m;
}

FieldMode random_mode(std::mt19937_64& rng) {
    static const int roots[] = {2, 3, 4, 6};
    const auto pick = uniform(rng, 0, 5);
    if (pick < 4) return FieldMode::root_of_unity(roots[pick]);
    return FieldMode::generic(static_cast<int>(pick - 3));
}

ExponentSystem random_system(std::mt19937_64& rng, int n, int bound, FieldMode mode) {
    ExponentSystem s{n, mode, {}};
    const int r = mode.is_root() ? 1 : mode.r;
    for (int k = 0; k < r; ++k) s.E.push_back(random_antisymmetric(rng, n, bound));
    return s;
}

Exponent random_exponent(std::mt19937_64& rng, int n, int bound) {
    Exponent a(static_cast<std::size_t>(n));
    for (auto& x : a) x = uniform(rng, -bound, bound);
    return a;
}

Element random_element(std::mt19937_64& rng, const AlgebraPtr& ctx, int terms, int bound) {
    Element a(ctx);
    for (int i = 0; i < terms; ++i)
        a.add_term(random_exponent(rng, ctx->n(), bound), random_small_scalar(ctx->field(), rng));
    return a;
}

std::string vec_text(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string system_text(const ExponentSystem& s) {
    std::ostringstream os;
    os << "n=" << s.n << " mode=" << s.mode.describe();
    for (std::size_t k = 0; k < s.E.size(); ++k) {
        os << " E" << k + 1 << "=[";
        for (std::size_t i = 0; i < s.E[k].rows(); ++i) os << (i ? "," : "") << vec_text(s.E[k].row(i));
        os << "]";
    }
    return os.str();
}

void record(PropertyResult& r, bool ok, const std::string& reproducer) {
    ++r.checked;
    if (ok) return;
    if (r.failures++ == 0) r.reproducer = reproducer;
}

// Runs one case, counting a thrown library error as a failure.
template <class F>
void guarded(PropertyResult& r, const std::string& inputs, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        record(r, false, inputs + ": " + e.what());
    }
}

AlgebraPtr random_split_algebra(std::mt19937_64& rng) {
    const int n = static_cast<int>(uniform(rng, 2, 3));
    return Algebra::make(random_system(rng, n, 2, random_mode(rng)), true);
}

}  // namespace

PropertyResult cocycle_property(std::uint64_t seed, int systems, int triples_per_system) {
    PropertyResult r{"cocycle identity", 0, 0, {}};
    std::mt19937_64 rng(seed);
    for (int s = 0; s < systems; ++s) {
        const int n = static_cast<int>(uniform(rng, 2, 4));
        const ExponentSystem sys = random_system(rng, n, 3, random_mode(rng));
        const AlgebraPtr A = Algebra::make(sys);
        for (int i = 0; i < triples_per_system; ++i) {
            const Exponent a1 = random_exponent(rng, n, 3), a2 = random_exponent(rng, n, 3),
                           a3 = random_exponent(rng, n, 3);
            Exponent a12(a1), a23(a2);
            for (int j = 0; j < n; ++j) {
                a12[static_cast<std::size_t>(j)] += a2[static_cast<std::size_t>(j)];
                a23[static_cast<std::size_t>(j)] += a3[static_cast<std::size_t>(j)];
            }
            const std::string inputs =
                system_text(sys) + " a1=" + vec_text(a1) + " a2=" + vec_text(a2) + " a3=" + vec_text(a3);
            guarded(r, inputs, [&] {
                record(r, A->cocycle(a1, a2) * A->cocycle(a12, a3) == A->cocycle(a2, a3) * A->cocycle(a1, a23),
                       inputs);
            });
        }
    }
    return r;
}

PropertyResult commutation_property(std::uint64_t seed, int pairs) {
    PropertyResult r{"commutation", 0, 0, {}};
    std::mt19937_64 rng(seed);
    AlgebraPtr A;
    for (int i = 0; i < pairs; ++i) {
        if (i % 100 == 0) {
            const int n = static_cast<int>(uniform(rng, 2, 4));
            A = Algebra::make(random_system(rng, n, 3, random_mode(rng)));
        }
        const Exponent a = random_exponent(rng, A->n(), 3), b = random_exponent(rng, A->n(), 3);
        const std::string inputs = system_text(A->system()) + " a=" + vec_text(a) + " b=" + vec_text(b);
        guarded(r, inputs, [&] {
            const Element xa = Element::monomial(A, a), xb = Element::monomial(A, b);
            record(r, xa * xb == (xb * xa).scaled(A->q_power(A->pairing(a, b))), inputs);
        });
    }
    return r;
}

PropertyResult division_property(std::uint64_t seed, int cases) {
    PropertyResult r{"division reconstruction", 0, 0, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        const AlgebraPtr A = random_split_algebra(rng);
        const Element f = random_unitary(A, static_cast<int>(uniform(rng, 1, 3)), rng);
        const Element g = random_element(rng, A, 4, 3);
        const std::string inputs = system_text(A->system()) + " f=" + format_element(f) + " g=" + format_element(g);
        guarded(r, inputs, [&] {
            const SkewForm ff = decompose(f);
            const auto lower = [&](const Element& rem) { return rem.is_zero() || decompose(rem).high() < ff.high(); };
            const Division right = right_divide(g, f, false);
            record(r, right.quotient * f + right.remainder == g && lower(right.remainder), inputs + " (right)");
            const Division left = left_divide(g, f);
            record(r, f * left.quotient + left.remainder == g && lower(left.remainder), inputs + " (left)");
            const Reducer red(normalize_unitary(f));
            Element h;
            const Element res = red.from_coords(red.reduce(g, &h));
            record(r, red.form().f * h + res == g, inputs + " (reduce)");
        });
    }
    return r;
}

PropertyResult smith_property(std::uint64_t seed, int cases) {
    PropertyResult r{"smith normal form", 0, 0, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        const auto rows = static_cast<std::size_t>(uniform(rng, 1, 4)), cols = static_cast<std::size_t>(uniform(rng, 1, 4));
        IntMatrix M(rows, cols);
        for (std::size_t a = 0; a < rows; ++a)
            for (std::size_t b = 0; b < cols; ++b) M(a, b) = uniform(rng, -6, 6);
        std::ostringstream os;
        os << "M=" << M;
        guarded(r, os.str(), [&] {
            const SmithForm s = smith_normal_form(M);
            bool ok = s.U * M * s.V == s.D;
            ok = ok && std::abs(determinant(s.U)) == 1 && std::abs(determinant(s.V)) == 1;
            for (std::size_t a = 0; a < rows && ok; ++a)
                for (std::size_t b = 0; b < cols; ++b)
                    if (a != b && s.D(a, b) != 0) ok = false;
            const IntVec d = s.invariant_factors();
            for (std::size_t k = 0; k + 1 < d.size() && ok; ++k)
                if (d[k] == 0 ? d[k + 1] != 0 : d[k + 1] % d[k] != 0) ok = false;
            record(r, ok, os.str());
        });
    }
    return r;
}

PropertyResult sigma_property(std::uint64_t seed, int cases) {
    PropertyResult r{"sigma automorphism", 0, 0, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        const AlgebraPtr A = random_split_algebra(rng);
        const auto base = [&] {
            Element b(A);
            for (int k = 0; k < 3; ++k) {
                Exponent e = random_exponent(rng, A->n(), 2);
                e.back() = 0;
                b.add_term(e, random_small_scalar(A->field(), rng));
            }
            return b;
        };
        const Element b1 = base(), b2 = base();
        const std::int64_t k = uniform(rng, -3, 3);
        const std::string inputs = system_text(A->system()) + " beta=" + format_element(b1) +
                                   " gamma=" + format_element(b2) + " k=" + std::to_string(k);
        guarded(r, inputs, [&] {
            record(r, sigma(b1, k) == t_power(A, k) * b1 * t_power(A, -k), inputs + " (conjugation)");
            record(r, sigma(b1 * b2, k) == sigma(b1, k) * sigma(b2, k), inputs + " (multiplicative)");
        });
    }
    return r;
}

PropertyResult roundtrip_property(std::uint64_t seed, int cases) {
    PropertyResult r{"parser round trip", 0, 0, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        const AlgebraPtr A = random_split_algebra(rng);
        const Element e = random_element(rng, A, 4, 3);
        const std::string text = format_element(e);
        const std::string inputs = system_text(A->system()) + " text=" + text;
        guarded(r, inputs, [&] { record(r, parse_element(text, A) == e, inputs); });
    }
    return r;
}

PropertyResult dimension_oracle_sweep(int max_n, int entry_bound, const std::vector<int>& root_orders) {
    PropertyResult r{"dimension oracle", 0, 0, {}};
    std::vector<FieldMode> modes{FieldMode::generic(1)};
    for (const int m : root_orders) modes.push_back(FieldMode::root_of_unity(m));
    for (int n = 1; n <= max_n; ++n) {
        const int entries = n * (n - 1) / 2;
        const int base = 2 * entry_bound + 1;
        int total = 1;
        for (int k = 0; k < entries; ++k) total *= base;
        for (int code = 0; code < total; ++code) {
            IntMatrix E(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            int c = code;
            for (std::size_t i = 0; i < E.rows(); ++i)
                for (std::size_t j = i + 1; j < E.cols(); ++j) {
                    E(i, j) = c % base - entry_bound;
                    E(j, i) = -E(i, j);
                    c /= base;
                }
            for (const FieldMode& mode : modes) {
                const ExponentSystem sys{n, mode, {E}};
                const std::string inputs = system_text(sys);
                guarded(r, inputs, [&] {
                    const DimensionResult d = algebra_dimension(sys);
                    // m e_i is central at a root of unity of order m, so bound m reaches rank n.
                    const int bound = mode.is_root() ? std::max(mode.m, entry_bound) : entry_bound;
                    const IsotropicResult b = brute_force_max_isotropic(sys, bound);
                    record(r, d.exact && d.value() == b.rank,
                           inputs + " dim=" + std::to_string(d.value()) + (d.exact ? "" : "?") +
                               " oracle=" + std::to_string(b.rank));
                });
            }
        }
    }
    return r;
}

std::vector<PropertyResult> run_selftest(bool full, std::uint64_t seed) {
    const int scale = full ? 10 : 1;
    std::vector<PropertyResult> out;
    out.push_back(cocycle_property(seed, 10 * scale, 100));
    out.push_back(commutation_property(seed + 1, 100 * scale));
    out.push_back(division_property(seed + 2, 10 * scale));
    out.push_back(smith_property(seed + 3, 100 * scale));
    out.push_back(sigma_property(seed + 4, 20 * scale));
    out.push_back(roundtrip_property(seed + 5, 50 * scale));
    out.push_back(full ? dimension_oracle_sweep(3, 2, {2, 3, 4, 6}) : dimension_oracle_sweep(2, 2, {2, 3, 4, 6}));
    return out;
}

}  // namespace qtorus
