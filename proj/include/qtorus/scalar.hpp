#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qtorus/cyclotomic.hpp"
#include "qtorus/ratfunc.hpp"

namespace qtorus {

/// Element of the ground field. Rational constants are field-agnostic and
/// mix with either of the two field kinds; every result is demoted back to
/// a plain rational when it is constant, so equality is structural.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(int c) : v_(Rational(c)) {}
    Scalar(long c) : v_(Rational(c)) {}
    Scalar(long long c) : v_(Rational(static_cast<long>(c))) {}
    Scalar(Rational c) : v_(std::move(c)) { std::get<Rational>(v_).canonicalize(); }
    Scalar(RatFunc f);
    Scalar(CycloNum z);

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    const RatFunc* ratfunc() const { return std::get_if<RatFunc>(&v_); }
    const CycloNum* cyclo() const { return std::get_if<CycloNum>(&v_); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;
    Scalar pow(std::int64_t k) const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

private:
    std::variant<Rational, RatFunc, CycloNum> v_;
};

/// The ground field: Q(q_1..q_r) for independent parameters, or Q(zeta_m).
struct FieldMode {
    enum class Kind { Generic, RootOfUnity };
    Kind kind = Kind::Generic;
    int r = 1;
    int m = 0;

    static FieldMode generic(int r);
    static FieldMode root_of_unity(int m);
    bool is_root() const { return kind == Kind::RootOfUnity; }
    std::string describe() const;
    friend bool operator==(const FieldMode&, const FieldMode&) = default;
};

class Field {
public:
    explicit Field(FieldMode mode);

    const FieldMode& mode() const { return mode_; }
    int parameter_count() const { return mode_.r; }
    const std::shared_ptr<const CyclotomicField>& cyclotomic() const { return cyclo_; }

    /// prod_k q_k^{e_k}, or zeta^{e_1} in root mode.
    Scalar q_power(std::span<const std::int64_t> exponents) const;
    Scalar parameter(int k) const;
    Scalar zeta() const;

    /// True iff q_power(e) == 1, decided on the exponent vector.
    bool is_trivial_power(std::span<const std::int64_t> exponents) const;

private:
    FieldMode mode_;
    std::shared_ptr<const CyclotomicField> cyclo_;
};

}  // namespace qtorus
