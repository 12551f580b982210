#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qtorus/algebra.hpp"

namespace qtorus {

// Skew-Laurent view A = B[t^{+-1}, sigma] with t = x_n and B spanned by the
// first n-1 coordinates (callers apply any change of basis beforehand).
// Coefficients are written on the right: alpha = sum_i t^i beta_i.

/// Algebra elements supported in B, keyed by t-degree.
struct SkewForm {
    AlgebraPtr ctx;
    std::map<std::int64_t, Element> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    std::int64_t low() const { return coeffs.begin()->first; }
    std::int64_t high() const { return coeffs.rbegin()->first; }
    Element coeff(std::int64_t k) const;
    /// Adds t^k beta.
    void add(std::int64_t k, const Element& beta);
};

Element t_power(const AlgebraPtr& ctx, std::int64_t k);
bool in_base(const Element& beta);

SkewForm decompose(const Element& alpha);
Element recompose(const SkewForm& form);

/// sigma^k(beta) = t^k beta t^{-k}; x^b -> q^{k <e_n, b>} x^b.
Element sigma(const Element& beta, std::int64_t k);

/// Whether the pairing vanishes on B, i.e. F*B is commutative.
bool base_is_commutative(const AlgebraPtr& ctx);

bool is_unitary(const Element& alpha);

/// f normalized to sum_{i=0}^d t^i c_i with c_0 = 1 and c_d a unit. The
/// normalization multiplies f on the right by units, so fA is unchanged.
struct UnitaryForm {
    AlgebraPtr ctx;
    std::vector<Element> c;  // c[0..d]
    Element f;               // recomposed normalized element
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

UnitaryForm normalize_unitary(const Element& f);

/// Reduction modulo the right ideal fA onto degrees 0..d-1.
class Reducer {
public:
    explicit Reducer(UnitaryForm f);

    const UnitaryForm& form() const { return f_; }
    int degree() const { return f_.degree(); }

    /// Coordinates (beta_0..beta_{d-1}) of the residue; when quotient is
    /// given it receives h with alpha = f h + residue.
    std::vector<Element> reduce(const Element& alpha, Element* quotient = nullptr) const;
    Element residue(const Element& alpha) const;
    Element from_coords(const std::vector<Element>& coords) const;

private:
    UnitaryForm f_;
};

/// c g = h f + rem with top degree of rem below that of f. c = 1 unless the
/// leading coefficient of f is not a unit, which needs a commutative B.
struct Division {
    Element multiplier;
    Element quotient;
    Element remainder;
};
Division right_divide(const Element& g, const Element& f, bool allow_pseudo = true);
/// g = f h + rem; the leading coefficient of f must be a unit.
Division left_divide(const Element& g, const Element& f);

/// alpha beta' = beta alpha' with beta' in B \ {0}; B must be commutative.
struct OreMultiple {
    Element alpha_prime;
    Element beta_prime;
};
OreMultiple ore_right_multiple(const Element& alpha, const Element& beta);

/// A linear factor t - mu x^b of f, found by bounded search.
struct MonomialFactor {
    bool right = true;    // f = cofactor (t - a) when right, else (t - a) cofactor
    Scalar mu;
    Exponent b;           // length n-1
    Element linear;       // t - mu x^b
    Element cofactor;
};

struct ScreenOptions {
    int support_bound = 2;
    int exponent_bound = 4;  // |e_k| for mu = s q^e in generic mode
};

/// f must be unitary. The right screen works on f normalized from the left
/// and the left screen on f normalized from the right, so the factors found
/// are factors of f itself.
std::optional<MonomialFactor> monomial_right_root_screen(const Element& f, const ScreenOptions& opt = {});
std::optional<MonomialFactor> monomial_left_root_screen(const Element& f, const ScreenOptions& opt = {});

}  // namespace qtorus
