#pragma once

#include <string>

#include <gmpxx.h>

#include "qtorus/sparse_poly.hpp"

namespace qtorus {

using Rational = mpq_class;
using QPoly = SparsePoly<Rational>;

/// Greatest common divisor of two polynomials over Q with nonnegative
/// exponents, normalized to leading coefficient 1 (0 only when both are 0).
QPoly gcd(const QPoly& a, const QPoly& b);

/// Element of Q(q_1, ..., q_r) in canonical form: numerator and denominator
/// are coprime polynomials with nonnegative exponents, no common monomial
/// factor, and the denominator's lex-leading coefficient is 1.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(std::size_t nvars) : num_(nvars), den_(nvars, Rational(1)) {}
    RatFunc(std::size_t nvars, const Rational& c) : num_(nvars, c), den_(nvars, Rational(1)) {}
    /// Builds num/den from Laurent polynomials and normalizes.
    RatFunc(QPoly num, QPoly den);

    /// q_1^{e_1} ... q_r^{e_r}.
    static RatFunc monomial(const std::vector<std::int64_t>& exponents);

    std::size_t nvars() const { return num_.nvars(); }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_term(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc inverse() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    struct Raw {};
    RatFunc(Raw, QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    QPoly num_;
    QPoly den_;
};

}  // namespace qtorus
