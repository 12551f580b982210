#pragma once

#include <cstdint>
#include <vector>

#include "qtorus/modp.hpp"
#include "qtorus/scalar.hpp"

namespace qtorus {

/// Univariate Laurent polynomial x^low * (c[0] + c[1] x + ...) over the
/// ground field. c has nonzero ends; the zero polynomial has empty c.
class LPoly {
public:
    LPoly() = default;
    LPoly(const Scalar& c, std::int64_t e = 0);
    static LPoly from_coeffs(std::int64_t low, std::vector<Scalar> c);

    bool is_zero() const { return c_.empty(); }
    /// Units of F[x^{+-1}] are the nonzero monomials.
    bool is_unit() const { return c_.size() == 1; }
    std::int64_t low() const { return low_; }
    std::int64_t high() const { return low_ + static_cast<std::int64_t>(c_.size()) - 1; }
    /// Degree of the x-free part.
    int span() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(std::int64_t e) const;

    LPoly operator-() const;
    friend LPoly operator+(const LPoly& a, const LPoly& b);
    friend LPoly operator-(const LPoly& a, const LPoly& b);
    friend LPoly operator*(const LPoly& a, const LPoly& b);
    LPoly& operator+=(const LPoly& o) { return *this = *this + o; }
    LPoly& operator-=(const LPoly& o) { return *this = *this - o; }
    LPoly scaled(const Scalar& s) const;
    LPoly shifted(std::int64_t k) const;

    /// Monic associate with nonzero constant term, and the unit u with
    /// *this = u * result.
    LPoly normalized(LPoly* unit = nullptr) const;

    friend bool operator==(const LPoly& a, const LPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }

    ModPoly specialize(const Specialization& s) const;  // x-free part

private:
    void trim();

    std::int64_t low_ = 0;
    std::vector<Scalar> c_;
};

/// Quotient and remainder of polynomials (low() == 0 for both inputs).
void poly_divrem(const LPoly& a, const LPoly& b, LPoly& q, LPoly& r);

/// Exact quotient in F[x^{+-1}]; throws when b does not divide a.
LPoly exact_div(const LPoly& a, const LPoly& b);

/// g = s a + t b with g the normalized gcd; a, b nonzero.
LPoly xgcd(const LPoly& a, const LPoly& b, LPoly& s, LPoly& t);

/// Representative of a modulo a normalized non-unit p, of degree < deg p,
/// and the Laurent quotient with a = quot p + rem.
LPoly laurent_mod(const LPoly& a, const LPoly& p, LPoly* quot = nullptr);

}  // namespace qtorus
