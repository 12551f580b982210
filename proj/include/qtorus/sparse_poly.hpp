#pragma once

// Sparse multivariate Laurent polynomials over an exact field K.
//
// K must be default-constructible to zero, constructible from int, and
// support +, -, *, / and ==. Terms are kept in descending lexicographic
// order of exponent vectors (variable 0 most significant), so begin() is
// the leading term for the lex order used by exact division.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qtorus/error.hpp"

namespace qtorus {

using Monomial = std::vector<std::int32_t>;

template <class K>
class SparsePoly {
public:
    using Terms = std::map<Monomial, K, std::greater<>>;

    SparsePoly() = default;
    explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}
    SparsePoly(std::size_t nvars, const K& c) : nvars_(nvars) {
        if (!is_zero_coeff(c)) terms_.emplace(Monomial(nvars, 0), c);
    }

    static SparsePoly monomial(std::size_t nvars, const Monomial& e, const K& c) {
        SparsePoly p(nvars);
        if (!is_zero_coeff(c)) p.terms_.emplace(e, c);
        return p;
    }
    static SparsePoly variable(std::size_t nvars, std::size_t i, std::int32_t power = 1) {
        Monomial e(nvars, 0);
        e[i] = power;
        return monomial(nvars, e, K(1));
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_exponent(terms_.begin()->first));
    }
    bool is_monomial() const { return terms_.size() == 1; }
    K constant_term() const {
        auto it = terms_.find(Monomial(nvars_, 0));
        return it == terms_.end() ? K() : it->second;
    }

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const K& leading_coeff() const { return terms_.begin()->second; }

    K coeff(const Monomial& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K() : it->second;
    }

    void add_term(const Monomial& e, const K& c) {
        if (is_zero_coeff(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    SparsePoly operator-() const {
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        a.check(b);
        SparsePoly r(a.nvars_);
        Monomial e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    SparsePoly scaled(const K& c) const {
        if (is_zero_coeff(c)) return SparsePoly(nvars_);
        SparsePoly r(nvars_);
        for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
        return r;
    }

    /// Multiplies by the monomial x^shift.
    SparsePoly shifted(const Monomial& shift) const {
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Monomial f = e;
            for (std::size_t i = 0; i < nvars_; ++i) f[i] += shift[i];
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    /// Componentwise minimum exponent over the support (zero vector for 0).
    Monomial min_exponents() const {
        Monomial m(nvars_, 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
            first = false;
        }
        return m;
    }

    std::int32_t degree(std::size_t var) const {
        std::int32_t d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    /// Coefficient of var^k as a polynomial with var's exponent cleared.
    SparsePoly coeff_in(std::size_t var, std::int32_t k) const {
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] != k) continue;
            Monomial f = e;
            f[var] = 0;
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    /// Exact division in the Laurent polynomial ring; throws when b does not
    /// divide *this.
    SparsePoly exact_div(const SparsePoly& b) const {
        check(b);
        if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
        Monomial sa = min_exponents(), sb = b.min_exponents();
        for (auto& x : sa) x = -x;
        for (auto& x : sb) x = -x;
        SparsePoly q = shifted(sa).poly_div(b.shifted(sb));
        for (std::size_t i = 0; i < nvars_; ++i) sa[i] -= sb[i];
        for (auto& x : sa) x = -x;
        return q.shifted(sa);
    }

    /// True when b divides a in the Laurent ring.
    bool divides(const SparsePoly& a) const {
        try {
            (void)a.exact_div(*this);
            return true;
        } catch (const Error&) {
            return false;
        }
    }

    template <class Fn>
    SparsePoly map_coeffs(Fn&& fn) const {
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            K v = fn(c);
            if (!is_zero_coeff(v)) r.terms_.emplace(e, std::move(v));
        }
        return r;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    // Division of polynomials with nonnegative exponents; the quotient must
    // have nonnegative exponents as well.
    SparsePoly poly_div(const SparsePoly& b) const {
        SparsePoly q(nvars_), r = *this;
        const Monomial lb = b.leading_monomial();
        const K cb = b.leading_coeff();
        Monomial e(nvars_);
        while (!r.is_zero()) {
            const Monomial lr = r.leading_monomial();
            for (std::size_t i = 0; i < nvars_; ++i) {
                e[i] = lr[i] - lb[i];
                if (e[i] < 0) throw Error(ErrorKind::DivisionByZero, "inexact polynomial division");
            }
            K c = r.leading_coeff() / cb;
            q.add_term(e, c);
            r -= monomial(nvars_, e, c) * b;
        }
        return q;
    }

    static bool is_zero_coeff(const K& c) { return c == K(); }
    static bool is_zero_exponent(const Monomial& e) {
        return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
    }
    void check(const SparsePoly& o) const {
        if (nvars_ != o.nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable counts differ");
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

}  // namespace qtorus
