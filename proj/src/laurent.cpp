#include "qtorus/laurent.hpp"

#include <algorithm>

#include "qtorus/error.hpp"

namespace qtorus {

LPoly::LPoly(const Scalar& c, std::int64_t e) : low_(e) {
    if (!c.is_zero()) c_.push_back(c);
    else low_ = 0;
}

LPoly LPoly::from_coeffs(std::int64_t low, std::vector<Scalar> c) {
    LPoly p;
    p.low_ = low;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

void LPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<std::int64_t>(lead);
    }
    if (c_.empty()) low_ = 0;
}

Scalar LPoly::coeff(std::int64_t e) const {
    if (c_.empty() || e < low_ || e > high()) return Scalar();
    return c_[static_cast<std::size_t>(e - low_)];
}

LPoly LPoly::operator-() const {
    LPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

LPoly operator+(const LPoly& a, const LPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::int64_t lo = std::min(a.low_, b.low_), hi = std::max(a.high(), b.high());
    std::vector<Scalar> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[static_cast<std::size_t>(a.low_ - lo) + i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[static_cast<std::size_t>(b.low_ - lo) + i] += b.c_[i];
    return LPoly::from_coeffs(lo, std::move(c));
}

LPoly operator-(const LPoly& a, const LPoly& b) { return a + (-b); }

LPoly operator*(const LPoly& a, const LPoly& b) {
    if (a.is_zero() || b.is_zero()) return LPoly();
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return LPoly::from_coeffs(a.low_ + b.low_, std::move(c));
}

LPoly LPoly::scaled(const Scalar& s) const {
    if (s.is_zero()) return LPoly();
    LPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

LPoly LPoly::shifted(std::int64_t k) const {
    LPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

LPoly LPoly::normalized(LPoly* unit) const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "normalizing the zero polynomial");
    const Scalar lead = c_.back();
    if (unit) *unit = LPoly(lead, low_);
    LPoly r = scaled(lead.inverse());
    r.low_ = 0;
    return r;
}

ModPoly LPoly::specialize(const Specialization& s) const {
    ModPoly out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(s(x));
    return modpoly_trim(std::move(out));
}

void poly_divrem(const LPoly& a, const LPoly& b, LPoly& q, LPoly& r) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if ((!a.is_zero() && a.low() < 0) || b.low() < 0)
        throw Error(ErrorKind::DimensionMismatch, "poly_divrem needs polynomials");
    // Dense coefficient vectors from degree 0.
    std::vector<Scalar> rem(a.is_zero() ? 0 : static_cast<std::size_t>(a.high() + 1));
    for (std::int64_t e = a.low(); !a.is_zero() && e <= a.high(); ++e) rem[static_cast<std::size_t>(e)] = a.coeff(e);
    const std::size_t db = static_cast<std::size_t>(b.high());
    std::vector<Scalar> bc(db + 1);
    for (std::int64_t e = b.low(); e <= b.high(); ++e) bc[static_cast<std::size_t>(e)] = b.coeff(e);
    const Scalar inv = bc[db].inverse();
    std::vector<Scalar> quo(rem.size() > db ? rem.size() - db : 0);
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        Scalar c = rem[k] * inv;
        quo[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i)
            if (!bc[i].is_zero()) rem[k - db + i] -= c * bc[i];
    }
    q = LPoly::from_coeffs(0, std::move(quo));
    rem.resize(std::min(rem.size(), db));
    r = LPoly::from_coeffs(0, std::move(rem));
}

LPoly exact_div(const LPoly& a, const LPoly& b) {
    if (a.is_zero()) return LPoly();
    LPoly q, r;
    poly_divrem(a.shifted(-a.low()), b.shifted(-b.low()), q, r);
    if (!r.is_zero()) throw Error(ErrorKind::DivisionByZero, "inexact Laurent division");
    return q.shifted(a.low() - b.low());
}

LPoly xgcd(const LPoly& a, const LPoly& b, LPoly& s, LPoly& t) {
    LPoly ua, ub;
    LPoly r0 = a.normalized(&ua), r1 = b.normalized(&ub);
    LPoly s0(Scalar(1)), s1, t0, t1(Scalar(1));
    while (!r1.is_zero()) {
        LPoly q, r;
        poly_divrem(r0, r1, q, r);
        LPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = s0 a' + t0 b' with a = ua a', b = ub b'.
    const Scalar lead = r0.coeffs().back();
    const Scalar li = lead.inverse();
    const LPoly ua_inv(ua.coeffs()[0].inverse(), -ua.low()), ub_inv(ub.coeffs()[0].inverse(), -ub.low());
    s = (s0 * ua_inv).scaled(li);
    t = (t0 * ub_inv).scaled(li);
    return r0.scaled(li);
}

LPoly laurent_mod(const LPoly& a, const LPoly& p, LPoly* quot) {
    if (p.is_unit()) {
        if (quot) *quot = exact_div(a, p);
        return LPoly();
    }
    if (p.low() != 0) throw Error(ErrorKind::DimensionMismatch, "laurent_mod needs a normalized modulus");
    if (a.is_zero()) {
        if (quot) *quot = LPoly();
        return LPoly();
    }
    LPoly q, body, rem;
    poly_divrem(a.shifted(-a.low()), p, q, body);
    LPoly xpow;  // x^{a.low()} mod p
    if (a.low() >= 0) {
        poly_divrem(LPoly(Scalar(1), a.low()), p, q, xpow);
    } else {
        // x^{-1} = -(p - p0) / (p0 x) mod p.
        const Scalar p0 = p.coeff(0);
        LPoly y = (p - LPoly(p0)).shifted(-1).scaled(-p0.inverse());
        xpow = LPoly(Scalar(1));
        for (std::int64_t k = 0; k < -a.low(); ++k) poly_divrem(xpow * y, p, q, xpow);
    }
    poly_divrem(xpow * body, p, q, rem);
    if (quot) *quot = exact_div(a - rem, p);
    return rem;
}

}  // namespace qtorus
