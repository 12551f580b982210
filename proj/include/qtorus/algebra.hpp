#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qtorus/lattice.hpp"
#include "qtorus/scalar.hpp"

namespace qtorus {

using Exponent = IntVec;

/// The quantum torus F*A for a validated exponent system. Monomials use the
/// normal-ordering cocycle lambda(a, b) = q^{sum_{i>j} E_ij a_i b_j}, so
/// ascending products x1^a1 x2^a2 ... xn^an equal x^a exactly.
class Algebra {
public:
    /// When last_is_t is set the n-th generator is printed as `t`.
    explicit Algebra(ExponentSystem sys, bool last_is_t = false);

    static std::shared_ptr<const Algebra> make(ExponentSystem sys, bool last_is_t = false) {
        return std::make_shared<const Algebra>(std::move(sys), last_is_t);
    }

    const ExponentSystem& system() const { return sys_; }
    const Field& field() const { return field_; }
    int n() const { return sys_.n; }
    bool last_is_t() const { return last_is_t_; }

    Scalar q_power(const IntVec& e) const { return field_.q_power(e); }
    IntVec cocycle_exponent(const Exponent& a, const Exponent& b) const;
    Scalar cocycle(const Exponent& a, const Exponent& b) const;
    IntVec pairing(const Exponent& a, const Exponent& b) const { return qtorus::pairing(a, b, sys_); }
    Scalar commutation_scalar(const Exponent& a, const Exponent& b) const;

    const Sublattice& center() const { return center_; }

private:
    ExponentSystem sys_;
    Field field_;
    bool last_is_t_;
    Sublattice center_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite sum of mu_a x^a with no zero coefficients.
class Element {
public:
    using Terms = std::map<Exponent, Scalar>;

    Element() = default;
    explicit Element(AlgebraPtr ctx) : ctx_(std::move(ctx)) {}

    static Element scalar(AlgebraPtr ctx, const Scalar& c);
    static Element monomial(AlgebraPtr ctx, const Exponent& a, const Scalar& c = Scalar(1));
    /// x_j^power, j 0-based.
    static Element generator(AlgebraPtr ctx, int j, std::int64_t power = 1);

    const AlgebraPtr& context() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::vector<Exponent> support() const;
    Scalar coeff(const Exponent& a) const;

    void add_term(const Exponent& a, const Scalar& c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    Element& operator*=(const Element& o) { return *this = *this * o; }
    Element scaled(const Scalar& c) const;

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

    /// Inverse of a unit mu x^a.
    Element unit_inverse() const;

private:
    void check(const Element& o) const;

    AlgebraPtr ctx_;
    Terms terms_;
};

bool is_central(const Element& a);
bool is_unit(const Element& a);
bool in_subalgebra(const Element& a, const Sublattice& B);

}  // namespace qtorus
