#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtorus/skew.hpp"

namespace qtorus {

/// Coordinates (beta_0..beta_{d-1}) of sum_i t^i beta_i in A/fA.
using ModVec = std::vector<Element>;

/// The cyclic right module A/fA for a unitary f, free over F*B on
/// 1, t, ..., t^{d-1}. Generators act on the right:
///   x_j (j < n-1): beta_i -> beta_i x_j
///   t:      w = T sigma^{-1}(beta),  T[i][i-1] = 1, T[i][d-1] -= c_i u^{-1}
///   t^{-1}: w = S sigma(beta),       S[i][i+1] = 1, S[i][0] -= sigma(c_{i+1})
/// where f = sum t^i c_i is normalized with c_0 = 1 and u = c_d.
class ContractionModule {
public:
    explicit ContractionModule(const Element& f);

    const AlgebraPtr& context() const { return ctx_; }
    /// f as supplied; form().f differs from it by a unit on the right.
    const Element& original() const { return original_; }
    const Reducer& reducer() const { return red_; }
    const UnitaryForm& form() const { return red_.form(); }
    int degree() const { return red_.degree(); }
    int n() const { return ctx_->n(); }

    const std::vector<std::vector<Element>>& t_matrix() const { return T_; }
    const std::vector<std::vector<Element>>& t_inverse_matrix() const { return S_; }

    ModVec zero() const;
    /// The cyclic generator, residue of 1.
    ModVec generator() const;
    ModVec coords(const Element& alpha) const { return red_.reduce(alpha); }
    Element element(const ModVec& v) const { return red_.from_coords(v); }

    /// v x_j^sign; j = n-1 is t.
    ModVec act(const ModVec& v, int j, int sign = 1) const;
    /// v alpha via reduction of (element(v) alpha).
    ModVec act_element(const ModVec& v, const Element& alpha) const;

    /// Checks (v x_i) x_j = q_ij (v x_j) x_i, (v x_i) x_i^{-1} = v and
    /// agreement with reduction, for every generator pair and probe.
    /// Returns a description of the first failure, empty when all hold.
    std::string verify_relations(const std::vector<ModVec>& probes) const;

private:
    AlgebraPtr ctx_;
    Element original_;
    Reducer red_;
    std::vector<std::vector<Element>> T_, S_;
};

struct TorsionVerdict {
    std::vector<int> coordinates;  // coordinate sublattice, 0-based
    std::string verdict;           // "not torsion", "torsion", "undetermined"
};

struct GkReport {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::string lower_witness;
    std::string upper_witness;
    std::vector<TorsionVerdict> sublattices;
    int value() const { return lower; }
};

GkReport gk_certified(const ContractionModule& m);

struct GrowthEstimate {
    std::vector<std::int64_t> dims;  // f(0..max_steps)
    bool exact = true;               // every f(m) is exact, not a mod-p lower bound
    double slope = 0;
    int window_lo = 0;
    int window_hi = 0;
};

/// f(m) = dim_F W_0 V_0^m with W_0 = span of the free basis and
/// V_0 = F + sum F x_j + sum F x_j^{-1} over all generators. Throws
/// BudgetExceeded when dim W_m exceeds max_dim.
GrowthEstimate gk_growth_estimate(const ContractionModule& m, int max_steps, std::uint64_t seed = 1,
                                  std::int64_t max_dim = 2'000'000);

struct CriticalityVerdict {
    bool torsion = false;  // quotient S/wA is B-torsion
    std::size_t rank = 0;  // rank over Frac(F*B) of the relation matrix
    int K = 0;
    bool by_specialization = false;  // rank certified by a mod-p image
};

/// Relation matrix with columns w t^k, |k| <= K; needs a commutative base.
CriticalityVerdict criticality_check(const ContractionModule& m, const ModVec& w, int K, std::uint64_t seed = 1);

struct SampleResult {
    ModVec w;
    std::string origin;  // "generator", "probe: ...", "random"
    bool generated = false;
    int k_used = -1;      // largest |k| inserted when generation was proved
    int rank = 0;         // rank reached by the column span
    std::string witness;  // how generation was certified
    std::string failure;  // "rank deficient" (exact) or "not generated within K = ..."
};

struct SimplicityCertificate {
    std::vector<SampleResult> samples;
    bool all_generated = false;
    int max_k_used = 0;
    std::optional<MonomialFactor> right_factor;
    std::optional<MonomialFactor> left_factor;
};

struct ModuleFactors {
    std::optional<MonomialFactor> right;
    std::optional<MonomialFactor> left;
};

/// Monomial linear factors of f, screening the supplied f before the
/// normalized one: f u = g sigma(u) (t - sigma(u)^{-1} a u) when f = g (t - a),
/// so normalization can push a root past the screen's exponent bound.
ModuleFactors monomial_factors(const ContractionModule& m, const ScreenOptions& opt = {});

/// Tests whether wA = A/fA (n = 2 only): columns w t^k for k = 0, 1, -1,
/// 2, ... up to |k| <= K_cap go into a Hermite form over F_p[x^{+-1}] after
/// specializing q; success is lifted to F[x^{+-1}] through one exact maximal
/// minor whose extreme x-coefficients survive the specialization.
SampleResult generation_test(const ContractionModule& m, const ModVec& w, int K_cap, std::uint64_t seed = 1);

/// Samples: the cyclic generator, probes built from any monomial factor the
/// screens find, then random sparse vectors, `samples` in total. Columns are
/// added one |k| at a time up to 4K.
SimplicityCertificate certify_simplicity_contraction(const ContractionModule& m, int samples, int K,
                                                     std::uint64_t seed);

/// Random nonzero vector with sparse small-support coordinates.
ModVec random_module_vector(const ContractionModule& m, std::uint64_t seed);

}  // namespace qtorus
