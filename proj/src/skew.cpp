#include "qtorus/skew.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "qtorus/element_io.hpp"
#include "qtorus/error.hpp"

namespace qtorus {

namespace {

std::size_t last(const AlgebraPtr& ctx) { return static_cast<std::size_t>(ctx->n() - 1); }

IntVec t_pairing(const AlgebraPtr& ctx, const Exponent& b) {
    Exponent en(b.size(), 0);
    en.back() = 1;
    return ctx->pairing(en, b);
}

}  // namespace

Element SkewForm::coeff(std::int64_t k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? Element(ctx) : it->second;
}

void SkewForm::add(std::int64_t k, const Element& beta) {
    if (beta.is_zero()) return;
    auto [it, inserted] = coeffs.emplace(k, beta);
    if (!inserted) {
        it->second += beta;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

Element t_power(const AlgebraPtr& ctx, std::int64_t k) { return Element::generator(ctx, ctx->n() - 1, k); }

bool in_base(const Element& beta) {
    if (beta.is_zero()) return true;
    const std::size_t t = last(beta.context());
    for (const auto& [a, c] : beta.terms())
        if (a[t] != 0) return false;
    return true;
}

SkewForm decompose(const Element& alpha) {
    SkewForm form{alpha.context(), {}};
    if (alpha.is_zero()) return form;
    const AlgebraPtr& ctx = alpha.context();
    const std::size_t t = last(ctx);
    for (const auto& [a, c] : alpha.terms()) {
        // x^{(b,i)} = q^{-i <e_n, b>} t^i x^b
        Exponent b = a;
        const std::int64_t i = b[t];
        b[t] = 0;
        IntVec e = t_pairing(ctx, b);
        for (auto& x : e) x = checked_mul(x, -i);
        Element beta = Element::monomial(ctx, b, c * ctx->q_power(e));
        form.add(i, beta);
    }
    return form;
}

Element recompose(const SkewForm& form) {
    Element out(form.ctx);
    for (const auto& [k, beta] : form.coeffs) out += t_power(form.ctx, k) * beta;
    return out;
}

Element sigma(const Element& beta, std::int64_t k) {
    if (!in_base(beta)) throw Error(ErrorKind::NotInSubalgebra, "sigma is defined on the coefficient subalgebra only");
    if (k == 0 || beta.is_zero()) return beta;
    const AlgebraPtr& ctx = beta.context();
    Element out(ctx);
    for (const auto& [b, c] : beta.terms()) {
        IntVec e = t_pairing(ctx, b);
        for (auto& x : e) x = checked_mul(x, k);
        out.add_term(b, ctx->field().is_trivial_power(e) ? c : c * ctx->q_power(e));
    }
    return out;
}

bool base_is_commutative(const AlgebraPtr& ctx) {
    const int n = ctx->n();
    std::vector<IntVec> basis;
    for (int i = 0; i + 1 < n; ++i) {
        IntVec e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        basis.push_back(e);
    }
    return is_commutative_set(basis, ctx->system());
}

bool is_unitary(const Element& alpha) {
    if (alpha.is_zero()) throw Error(ErrorKind::ZeroElement, "unitarity of the zero element is undefined");
    SkewForm s = decompose(alpha);
    return is_unit(s.coeffs.begin()->second) && is_unit(s.coeffs.rbegin()->second);
}

UnitaryForm normalize_unitary(const Element& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroElement, "cannot normalize the zero element");
    const AlgebraPtr& ctx = f.context();
    SkewForm s = decompose(f);
    const Element& lo = s.coeffs.begin()->second;
    const Element& hi = s.coeffs.rbegin()->second;
    if (!is_unit(lo))
        throw Error(ErrorKind::NotUnitary, "trailing coefficient " + format_element(lo) + " is not a unit");
    if (!is_unit(hi))
        throw Error(ErrorKind::NotUnitary, "leading coefficient " + format_element(hi) + " is not a unit");
    Element g = f * t_power(ctx, -s.low());
    SkewForm sg = decompose(g);
    g = g * sg.coeff(0).unit_inverse();
    SkewForm n = decompose(g);
    UnitaryForm out{ctx, {}, g};
    for (std::int64_t i = 0; i <= n.high(); ++i) out.c.push_back(n.coeff(i));
    return out;
}

Reducer::Reducer(UnitaryForm f) : f_(std::move(f)) {
    if (f_.c.empty() || !(f_.c[0] == Element::scalar(f_.ctx, 1)) || !is_unit(f_.c.back()))
        throw Error(ErrorKind::NotUnitary, "reducer needs a normalized unitary element");
}

std::vector<Element> Reducer::reduce(const Element& alpha, Element* quotient) const {
    const AlgebraPtr& ctx = f_.ctx;
    const int d = degree();
    SkewForm r = decompose(alpha);
    SkewForm h{ctx, {}};
    const auto& c = f_.c;
    while (!r.is_zero() && r.high() > d - 1) {
        const std::int64_t D = r.high(), k = D - d;
        Element gamma = sigma(c[static_cast<std::size_t>(d)], -k).unit_inverse() * r.coeff(D);
        for (int i = 0; i <= d; ++i) r.add(i + k, -(sigma(c[static_cast<std::size_t>(i)], -k) * gamma));
        h.add(k, gamma);
    }
    while (!r.is_zero() && r.low() < 0) {
        const std::int64_t D = r.low();
        Element gamma = r.coeff(D);
        for (int i = 0; i <= d; ++i) r.add(i + D, -(sigma(c[static_cast<std::size_t>(i)], -D) * gamma));
        h.add(D, gamma);
    }
    if (quotient) *quotient = recompose(h);
    std::vector<Element> out;
    for (int i = 0; i < d; ++i) out.push_back(r.coeff(i));
    return out;
}

Element Reducer::residue(const Element& alpha) const { return from_coords(reduce(alpha)); }

Element Reducer::from_coords(const std::vector<Element>& coords) const {
    Element out(f_.ctx);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) out += t_power(f_.ctx, static_cast<std::int64_t>(i)) * coords[i];
    return out;
}

Division right_divide(const Element& g, const Element& f, bool allow_pseudo) {
    if (f.is_zero()) throw Error(ErrorKind::DivisionByZero, "right division by zero");
    const AlgebraPtr& ctx = f.context();
    SkewForm sf = decompose(f);
    const std::int64_t q = sf.high();
    const Element lead = sf.coeff(q);
    const bool unit = is_unit(lead);
    if (!unit) {
        if (!allow_pseudo)
            throw Error(ErrorKind::NonUnitLeadingCoefficient,
                        "leading coefficient " + format_element(lead) + " is not a unit");
        if (!base_is_commutative(ctx))
            throw Error(ErrorKind::NonCommutativeCoefficients, "pseudo-division needs a commutative coefficient ring");
    }
    Division out{Element::scalar(ctx, 1), Element(ctx), g};
    const Element lead_inv = unit ? lead.unit_inverse() : Element(ctx);
    for (;;) {
        if (out.remainder.is_zero()) break;
        SkewForm sr = decompose(out.remainder);
        const std::int64_t D = sr.high();
        if (D < q) break;
        const Element rD = sr.coeff(D);
        if (unit) {
            // (t^{D-q} gamma)(t^q lead) has leading coefficient sigma^{-q}(gamma) lead.
            Element T = t_power(ctx, D - q) * sigma(rD * lead_inv, q);
            out.remainder -= T * f;
            out.quotient += T;
        } else {
            // sigma^D(lead) rem - t^{D-q} sigma^q(r_D) f drops the top degree.
            Element lam = sigma(lead, D);
            Element T = t_power(ctx, D - q) * sigma(rD, q);
            out.remainder = lam * out.remainder - T * f;
            out.quotient = lam * out.quotient + T;
            out.multiplier = lam * out.multiplier;
        }
    }
    return out;
}

Division left_divide(const Element& g, const Element& f) {
    if (f.is_zero()) throw Error(ErrorKind::DivisionByZero, "left division by zero");
    const AlgebraPtr& ctx = f.context();
    SkewForm sf = decompose(f);
    const std::int64_t q = sf.high();
    const Element lead = sf.coeff(q);
    if (!is_unit(lead))
        throw Error(ErrorKind::NonUnitLeadingCoefficient, "leading coefficient " + format_element(lead) + " is not a unit");
    Division out{Element::scalar(ctx, 1), Element(ctx), g};
    for (;;) {
        if (out.remainder.is_zero()) break;
        SkewForm sr = decompose(out.remainder);
        const std::int64_t D = sr.high();
        if (D < q) break;
        const std::int64_t k = D - q;
        // f t^k gamma has leading coefficient sigma^{-k}(lead) gamma.
        Element T = t_power(ctx, k) * (sigma(lead, -k).unit_inverse() * sr.coeff(D));
        out.remainder -= f * T;
        out.quotient += T;
    }
    return out;
}

OreMultiple ore_right_multiple(const Element& alpha, const Element& beta) {
    const AlgebraPtr& ctx = beta.context();
    if (beta.is_zero()) throw Error(ErrorKind::ZeroElement, "Ore multiple needs a nonzero denominator");
    if (!in_base(beta)) throw Error(ErrorKind::NotInSubalgebra, "denominator must lie in the coefficient subalgebra");
    if (!base_is_commutative(ctx))
        throw Error(ErrorKind::NonCommutativeCoefficients, "Ore multiples are implemented over a commutative base");
    SkewForm s = decompose(alpha);
    Element beta_prime = Element::scalar(ctx, 1);
    for (const auto& [i, a] : s.coeffs) beta_prime *= sigma(beta, -i);
    if (s.is_zero()) beta_prime = beta;
    SkewForm ap{ctx, {}};
    for (const auto& [i, a] : s.coeffs) {
        Element prod = a;
        for (const auto& [j, b] : s.coeffs)
            if (j != i) prod *= sigma(beta, -j);
        ap.add(i, prod);
    }
    OreMultiple out{recompose(ap), beta_prime};
    if (!(alpha * out.beta_prime == beta * out.alpha_prime))
        throw Error(ErrorKind::NonCommutativeCoefficients, "Ore identity failed to verify");
    return out;
}

// ---------------------------------------------------------------------------
// Monomial root screens.

namespace {

// Nonzero rational roots of sum_i a_i s^i.
std::vector<Rational> rational_roots(std::vector<Rational> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    std::vector<Rational> roots;
    if (a.size() < 2) return roots;
    std::size_t lo = 0;
    while (a[lo] == 0) ++lo;
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(lo));
    if (a.size() < 2) return roots;
    mpz_class den = 1;
    for (const auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : a) z.push_back(mpz_class(c * den));
    auto divisors = [](mpz_class v) -> std::optional<std::vector<mpz_class>> {
        v = abs(v);
        if (v > mpz_class("10000000000")) return std::nullopt;
        std::vector<mpz_class> ds;
        for (mpz_class k = 1; k * k <= v; ++k)
            if (v % k == 0) {
                ds.push_back(k);
                if (k * k != v) ds.push_back(v / k);
            }
        return ds;
    };
    auto num = divisors(z.front()), dnm = divisors(z.back());
    if (!num || !dnm) return roots;
    for (const auto& p : *num)
        for (const auto& q : *dnm)
            for (int sgn : {1, -1}) {
                Rational s(p * sgn, q);
                s.canonicalize();
                Rational v = 0;
                for (std::size_t i = a.size(); i-- > 0;) v = v * s + a[i];
                if (v == 0 && std::find(roots.begin(), roots.end(), s) == roots.end()) roots.push_back(s);
            }
    std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) {
        const Rational aa = abs(a), ab = abs(b);
        return aa != ab ? aa < ab : a > b;
    });
    return roots;
}

// Q-linear coordinates of a scalar whose denominator is a monomial.
std::map<std::vector<std::int64_t>, Rational> q_coordinates(const Scalar& s, std::size_t nparams) {
    std::map<std::vector<std::int64_t>, Rational> out;
    if (s.is_zero()) return out;
    if (s.is_rational()) {
        out[std::vector<std::int64_t>(nparams, 0)] = s.rational();
        return out;
    }
    if (const RatFunc* f = s.ratfunc()) {
        if (!f->den().is_monomial()) throw Error(ErrorKind::DivisionByZero, "denominator not cleared");
        const auto& [de, dc] = *f->den().terms().begin();
        for (const auto& [e, c] : f->num().terms()) {
            std::vector<std::int64_t> k;
            for (std::size_t i = 0; i < e.size(); ++i) k.push_back(e[i] - de[i]);
            out[k] += c / dc;
        }
        return out;
    }
    const auto& cs = s.cyclo()->coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] != 0) out[{static_cast<std::int64_t>(i)}] = cs[i];
    return out;
}

// Scalars mu = s q^e with s rational solving sum_i mu^i P_i = 0 for every
// B-monomial; system[b][i] is the coefficient of mu^i at monomial b.
std::vector<Scalar> solve_mu(const std::map<Exponent, std::vector<Scalar>>& system, const Field& field,
                             int exponent_bound) {
    std::vector<Scalar> found;
    const FieldMode& mode = field.mode();
    const int r = mode.r;
    std::vector<std::vector<std::int64_t>> exps;
    if (mode.is_root()) {
        for (std::int64_t e = 0; e < mode.m; ++e) exps.push_back({e});
    } else {
        std::vector<std::int64_t> e(static_cast<std::size_t>(r), -exponent_bound);
        for (;;) {
            exps.push_back(e);
            std::size_t i = 0;
            while (i < e.size() && e[i] == exponent_bound) e[i++] = -exponent_bound;
            if (i == e.size()) break;
            ++e[i];
        }
        std::stable_sort(exps.begin(), exps.end(), [](const auto& a, const auto& b) {
            std::int64_t na = 0, nb = 0;
            for (auto x : a) na += std::llabs(x);
            for (auto x : b) nb += std::llabs(x);
            return na != nb ? na < nb : a < b;
        });
    }
    for (const auto& e : exps) {
        Scalar qe = field.q_power(e);
        // Polynomials in s over Q that must all vanish.
        std::vector<std::vector<Rational>> polys;
        for (const auto& [b, coeffs] : system) {
            std::vector<Scalar> a(coeffs.size());
            Scalar w(1);
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                a[i] = coeffs[i] * w;
                w *= qe;
            }
            // Clear non-monomial denominators.
            Scalar den(1);
            for (const auto& x : a)
                if (const RatFunc* f = x.ratfunc(); f && !f->den().is_monomial())
                    den *= Scalar(RatFunc(f->den(), QPoly(f->nvars(), Rational(1))));
            std::map<std::vector<std::int64_t>, std::vector<Rational>> split;
            for (std::size_t i = 0; i < a.size(); ++i)
                for (const auto& [k, v] : q_coordinates(a[i] * den, static_cast<std::size_t>(mode.is_root() ? 1 : r))) {
                    auto& p = split[k];
                    p.resize(a.size(), 0);
                    p[i] += v;
                }
            for (auto& [k, p] : split) polys.push_back(std::move(p));
        }
        // Nonzero polynomial of least degree gives candidate roots.
        const std::vector<Rational>* pivot = nullptr;
        std::size_t best = SIZE_MAX;
        for (const auto& p : polys) {
            std::size_t deg = 0;
            for (std::size_t i = 0; i < p.size(); ++i)
                if (p[i] != 0) deg = i + 1;
            if (deg > 0 && deg < best) best = deg, pivot = &p;
        }
        std::vector<Rational> cands;
        if (!pivot) cands.push_back(1);
        else cands = rational_roots(*pivot);
        for (const auto& s : cands) {
            bool ok = true;
            for (const auto& p : polys) {
                Rational v = 0;
                for (std::size_t i = p.size(); i-- > 0;) v = v * s + p[i];
                if (v != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) found.push_back(Scalar(s) * qe);
        }
    }
    return found;
}

std::vector<Exponent> base_box(int nb, int bound, int n) {
    std::vector<Exponent> out;
    Exponent b(static_cast<std::size_t>(nb), -bound);
    if (nb == 0) return {Exponent(static_cast<std::size_t>(n), 0)};
    for (;;) {
        Exponent full = b;
        full.push_back(0);
        out.push_back(full);
        std::size_t i = 0;
        while (i < b.size() && b[i] == bound) b[i++] = -bound;
        if (i == b.size()) break;
        ++b[i];
    }
    std::stable_sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& c) {
        std::int64_t na = 0, nc = 0;
        for (auto x : a) na += std::llabs(x);
        for (auto x : c) nc += std::llabs(x);
        return na != nc ? na < nc : a < c;
    });
    return out;
}

std::optional<MonomialFactor> screen(const Element& original, const ScreenOptions& opt, bool right) {
    const AlgebraPtr& ctx = original.context();
    if (original.is_zero()) throw Error(ErrorKind::ZeroElement, "cannot screen the zero element");
    // Right factors survive left multiplication by units and vice versa.
    SkewForm s0 = decompose(original);
    if (!is_unit(s0.coeffs.begin()->second) || !is_unit(s0.coeffs.rbegin()->second))
        throw Error(ErrorKind::NotUnitary, "screening needs a unitary element");
    Element unit;  // right: f = unit * fn; left: f = fn * unit
    Element fn;
    if (right) {
        Element shifted = t_power(ctx, -s0.low()) * original;
        unit = t_power(ctx, s0.low()) * decompose(shifted).coeff(0);
        fn = unit.unit_inverse() * original;
    } else {
        fn = normalize_unitary(original).f;
        Element shifted = original * t_power(ctx, -s0.low());
        unit = decompose(shifted).coeff(0) * t_power(ctx, s0.low());
    }
    SkewForm sf = decompose(fn);
    const int d = static_cast<int>(sf.high());
    const int n = ctx->n();
    for (const Exponent& b : base_box(n - 1, opt.support_bound, n)) {
        Element xb = Element::monomial(ctx, b);
        // right: sigma^i(c_i) sigma^{i-1}(x^b)...x^b; left: x^b sigma^{-1}(x^b)...sigma^{-(i-1)}(x^b) c_i.
        std::map<Exponent, std::vector<Scalar>> system;
        Element chain = Element::scalar(ctx, 1);
        for (int i = 0; i <= d; ++i) {
            const Element ci = sf.coeff(i);
            Element P = right ? sigma(ci, i) * chain : chain * ci;
            for (const auto& [e, c] : P.terms()) {
                auto& v = system[e];
                v.resize(static_cast<std::size_t>(d) + 1);
                v[static_cast<std::size_t>(i)] += c;
            }
            chain = right ? sigma(xb, i) * chain : chain * sigma(xb, -i);
        }
        for (const Scalar& mu : solve_mu(system, ctx->field(), opt.exponent_bound)) {
            Element linear = t_power(ctx, 1) - Element::monomial(ctx, b, mu);
            Division dv = right ? right_divide(fn, linear, false) : left_divide(fn, linear);
            if (!dv.remainder.is_zero()) continue;
            Exponent bb(b.begin(), b.end() - 1);
            Element cof = right ? unit * dv.quotient : dv.quotient * unit;
            return MonomialFactor{right, mu, bb, linear, cof};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<MonomialFactor> monomial_right_root_screen(const Element& f, const ScreenOptions& opt) {
    return screen(f, opt, true);
}

std::optional<MonomialFactor> monomial_left_root_screen(const Element& f, const ScreenOptions& opt) {
    return screen(f, opt, false);
}

}  // namespace qtorus
