#pragma once

#include <memory>
#include <vector>

#include <gmpxx.h>

namespace qtorus {

/// Q(zeta) for a primitive m-th root of unity, realized as Q[x]/(Phi_m).
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> get(int m);

    int order() const { return m_; }
    int degree() const { return static_cast<int>(phi_.size()) - 1; }
    /// Coefficients of Phi_m, constant term first (monic).
    const std::vector<mpz_class>& modulus() const { return phi_; }
    /// Reduced coordinates of zeta^k for 0 <= k < m.
    const std::vector<mpq_class>& power(int k) const { return powers_[static_cast<std::size_t>(k)]; }

    explicit CyclotomicField(int m);

private:
    int m_;
    std::vector<mpz_class> phi_;
    std::vector<std::vector<mpq_class>> powers_;
};

/// Element of Q(zeta_m): coordinates in the basis 1, zeta, ..., zeta^{phi(m)-1}.
class CycloNum {
public:
    CycloNum() = default;
    CycloNum(std::shared_ptr<const CyclotomicField> field, std::vector<mpq_class> coeffs);
    static CycloNum zeta_power(std::shared_ptr<const CyclotomicField> field, std::int64_t k);
    static CycloNum constant(std::shared_ptr<const CyclotomicField> field, const mpq_class& c);

    const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
    int order() const { return field_->order(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_constant() const;
    mpq_class constant_value() const { return c_.empty() ? mpq_class(0) : c_[0]; }

    CycloNum operator-() const;
    friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }
    CycloNum inverse() const;

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        return a.order() == b.order() && a.c_ == b.c_;
    }

private:
    void check(const CycloNum& o) const;

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<mpq_class> c_;
};

}  // namespace qtorus
