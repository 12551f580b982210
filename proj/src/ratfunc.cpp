#include "qtorus/ratfunc.hpp"

#include <algorithm>
#include <optional>

#include "qtorus/error.hpp"

namespace qtorus {

namespace {

QPoly monic(const QPoly& p) {
    if (p.is_zero()) return p;
    Rational lc = p.leading_coeff();
    if (lc == 1) return p;
    return p.scaled(Rational(1) / lc);
}

QPoly one_like(const QPoly& p) { return QPoly(p.nvars(), Rational(1)); }

// Scales p to integer coefficients with gcd 1; keeps PRS coefficients small.
QPoly integer_primitive(const QPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den = 1, num = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational k(den, num);
    k.canonicalize();
    return k == 1 ? p : p.scaled(k);
}

int main_variable(const QPoly& a, const QPoly& b) {
    for (int v = static_cast<int>(a.nvars()) - 1; v >= 0; --v)
        if (a.degree(v) > 0 || b.degree(v) > 0) return v;
    return -1;
}

QPoly gcd_core(const QPoly& a, const QPoly& b);

QPoly content_in(const QPoly& p, std::size_t v) {
    QPoly g(p.nvars());
    for (std::int32_t k = p.degree(v); k >= 0; --k) {
        QPoly c = p.coeff_in(v, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? monic(c) : gcd_core(g, c);
        if (g.is_constant()) return one_like(p);
    }
    return g;
}

QPoly primitive_in(const QPoly& p, std::size_t v) {
    QPoly c = content_in(p, v);
    return c.is_constant() ? p : p.exact_div(c);
}

// Sparse pseudo-remainder of a by b with respect to variable v.
QPoly pseudo_rem(QPoly a, const QPoly& b, std::size_t v) {
    const std::int32_t db = b.degree(v);
    const QPoly lb = b.coeff_in(v, db);
    while (!a.is_zero()) {
        std::int32_t da = a.degree(v);
        if (da < db) break;
        QPoly la = a.coeff_in(v, da);
        a = lb * a - la * QPoly::variable(a.nvars(), v, da - db) * b;
    }
    return a;
}

QPoly gcd_core(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return one_like(a);
    const int vi = main_variable(a, b);
    if (vi < 0) return one_like(a);
    const auto v = static_cast<std::size_t>(vi);
    if (a.degree(v) == 0) return gcd_core(a, content_in(b, v));
    if (b.degree(v) == 0) return gcd_core(content_in(a, v), b);

    QPoly ca = content_in(a, v), cb = content_in(b, v);
    QPoly pa = integer_primitive(ca.is_constant() ? a : a.exact_div(ca));
    QPoly pb = integer_primitive(cb.is_constant() ? b : b.exact_div(cb));
    QPoly c = gcd_core(ca, cb);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    for (;;) {
        QPoly r = pseudo_rem(pa, pb, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) return monic(c);
        pa = std::move(pb);
        pb = integer_primitive(primitive_in(r, v));
    }
    return monic(primitive_in(pb, v) * c);
}

// Heuristic gcd over Z[x]: evaluate the main variable at a large integer,
// recurse, rebuild by balanced xi-adic expansion and verify by division.
// Inputs have integer coefficients and nonnegative exponents.
std::optional<QPoly> gcd_heuristic(const QPoly& a, const QPoly& b, int depth);

mpz_class max_norm(const QPoly& p) {
    mpz_class m = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_class x = abs(c.get_num());
        if (x > m) m = x;
    }
    return m;
}

mpz_class integer_content(const QPoly& p) {
    mpz_class g = 0;
    for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    return g;
}

QPoly evaluate_at(const QPoly& p, std::size_t v, const mpz_class& xi) {
    QPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        mpz_class w;
        mpz_pow_ui(w.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(e[v]));
        Monomial f = e;
        f[v] = 0;
        r.add_term(f, c * Rational(w));
    }
    return r;
}

QPoly xi_adic(QPoly gamma, std::size_t v, const mpz_class& xi) {
    QPoly g(gamma.nvars());
    const mpz_class half = xi / 2;
    for (std::int32_t i = 0; !gamma.is_zero(); ++i) {
        QPoly digit(gamma.nvars());
        for (const auto& [e, c] : gamma.terms()) {
            mpz_class x = c.get_num(), rem;
            mpz_fdiv_r(rem.get_mpz_t(), x.get_mpz_t(), xi.get_mpz_t());
            if (rem > half) rem -= xi;
            if (rem != 0) digit.add_term(e, Rational(rem));
        }
        gamma -= digit;
        QPoly next(gamma.nvars());
        for (const auto& [e, c] : gamma.terms()) next.add_term(e, Rational(mpz_class(c.get_num() / xi)));
        gamma = std::move(next);
        Monomial sh(g.nvars(), 0);
        sh[v] = i;
        g += digit.shifted(sh);
        if (i > 10000) break;
    }
    return g;
}

bool divides_exactly(const QPoly& d, const QPoly& p) {
    try {
        QPoly q = p.exact_div(d);
        return q * d == p;
    } catch (const Error&) {
        return false;
    }
}

std::optional<QPoly> gcd_heuristic(const QPoly& a, const QPoly& b, int depth) {
    if (depth > 8) return std::nullopt;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    mpz_class ca = integer_content(a), cb = integer_content(b), c0;
    mpz_gcd(c0.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    const int vi = main_variable(a, b);
    if (vi < 0) return QPoly(a.nvars(), Rational(c0));
    const auto v = static_cast<std::size_t>(vi);
    QPoly A = a.scaled(Rational(1) / Rational(ca)), B = b.scaled(Rational(1) / Rational(cb));
    mpz_class na = max_norm(A), nb = max_norm(B);
    mpz_class xi = 2 * (na < nb ? na : nb) + 2;
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) > 4000) return std::nullopt;
        QPoly ea = evaluate_at(A, v, xi), eb = evaluate_at(B, v, xi);
        if (!ea.is_zero() && !eb.is_zero()) {
            if (auto gamma = gcd_heuristic(ea, eb, depth + 1)) {
                QPoly G = xi_adic(*gamma, v, xi);
                if (!G.is_zero()) {
                    mpz_class cg = integer_content(G);
                    G = G.scaled(Rational(1) / Rational(cg));
                    if (divides_exactly(G, A) && divides_exactly(G, B)) return G.scaled(Rational(c0));
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

Monomial negated(Monomial m) {
    for (auto& x : m) x = -x;
    return m;
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    Monomial ma = a.min_exponents(), mb = b.min_exponents(), mg(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) mg[i] = std::min(ma[i], mb[i]);
    QPoly pa = integer_primitive(a.shifted(negated(ma))), pb = integer_primitive(b.shifted(negated(mb)));
    QPoly core;
    if (auto h = gcd_heuristic(pa, pb, 0)) core = std::move(*h);
    else core = gcd_core(pa, pb);
    return monic(core.shifted(mg));
}

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    normalize();
}

RatFunc RatFunc::monomial(const std::vector<std::int64_t>& exponents) {
    const std::size_t r = exponents.size();
    Monomial pos(r, 0), neg(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        if (exponents[i] > 0) pos[i] = static_cast<std::int32_t>(exponents[i]);
        else neg[i] = static_cast<std::int32_t>(-exponents[i]);
    }
    return RatFunc(Raw{}, QPoly::monomial(r, pos, Rational(1)), QPoly::monomial(r, neg, Rational(1)));
}

void RatFunc::normalize() {
    const std::size_t r = num_.nvars();
    if (num_.is_zero()) {
        den_ = QPoly(r, Rational(1));
        return;
    }
    // Move monomial content: num = x^mn * n', den = x^md * d'.
    Monomial mn = num_.min_exponents(), md = den_.min_exponents();
    Monomial to_num(r, 0), to_den(r, 0);
    bool shift = false;
    for (std::size_t i = 0; i < r; ++i) {
        std::int32_t d = mn[i] - md[i];
        if (d > 0) to_num[i] = d;
        else to_den[i] = -d;
        if (mn[i] != to_num[i] || md[i] != to_den[i]) shift = true;
    }
    if (shift) {
        Monomial sn(r), sd(r);
        for (std::size_t i = 0; i < r; ++i) {
            sn[i] = to_num[i] - mn[i];
            sd[i] = to_den[i] - md[i];
        }
        num_ = num_.shifted(sn);
        den_ = den_.shifted(sd);
    }
    if (!den_.is_monomial() && !num_.is_monomial()) {
        QPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator-() const { return RatFunc(Raw{}, -num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.nvars());
    if (a.den_.is_constant() && b.den_.is_constant() && a.num_.is_monomial() && b.num_.is_monomial())
        return RatFunc(RatFunc::Raw{}, a.num_ * b.num_, a.den_);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

}  // namespace qtorus
