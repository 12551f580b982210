#include "qtorus/survey.hpp"

#include <algorithm>
#include <random>

#include "qtorus/contraction.hpp"
#include "qtorus/element_io.hpp"
#include "qtorus/error.hpp"
#include "qtorus/generators.hpp"
#include "qtorus/hypotheses.hpp"
#include "qtorus/induced.hpp"

namespace qtorus {

namespace {

ExponentSystem rank_one(int n, std::vector<std::vector<std::int64_t>> upper) {
    ExponentSystem s{n, FieldMode::generic(1), {IntMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n))}};
    for (const auto& e : upper) {
        s.E[0](static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1])) = e[2];
        s.E[0](static_cast<std::size_t>(e[1]), static_cast<std::size_t>(e[0])) = -e[2];
    }
    return s;
}

IntMatrix antisymmetric3(std::int64_t e12, std::int64_t e13, std::int64_t e23) {
    return IntMatrix{{0, e12, e13}, {-e12, 0, e23}, {-e13, -e23, 0}};
}

std::string matrix_text(const IntMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + std::to_string(m(i, j));
        s += "]";
    }
    return s + "]";
}

bool induced_growth_is_linear(const InducedModule& W, int steps) {
    const auto dims = induced_growth(W, steps);
    for (std::size_t m = 0; m < dims.size(); ++m)
        if (dims[m] != 2 * static_cast<std::int64_t>(m) + 1) return false;
    return true;
}

std::uint64_t module_seed(std::uint64_t seed, std::size_t entry, int index) {
    return seed * 1000003ULL + entry * 1009ULL + static_cast<std::uint64_t>(index);
}

}  // namespace

std::optional<CorpusEntry> search_rank_two_system(const CorpusSearch& search, std::uint64_t* examined) {
    // B = <e1, e2> commutative forces E_12 = 0 in both matrices.
    std::vector<std::int64_t> values{0};
    for (int v = 1; v <= search.entry_bound; ++v) {
        values.push_back(v);
        values.push_back(-v);
    }
    std::uint64_t count = 0;
    for (const auto a : values)
        for (const auto b : values)
            for (const auto c : values)
                for (const auto d : values) {
                    if (count >= search.max_candidates) {
                        if (examined) *examined = count;
                        return std::nullopt;
                    }
                    ++count;
                    ExponentSystem s{3, FieldMode::generic(2), {antisymmetric3(0, a, b), antisymmetric3(0, c, d)}};
                    const HypothesisFlags h = check_hypotheses(s);
                    if (!h.B_commutative || !h.center_trivial || !h.dim_is_n_minus_1) continue;
                    if (examined) *examined = count;
                    return CorpusEntry{"n=3 r=2 E1=" + matrix_text(s.E[0]) + " E2=" + matrix_text(s.E[1]), s};
                }
    if (examined) *examined = count;
    return std::nullopt;
}

std::vector<CorpusEntry> default_corpus(const CorpusSearch& search) {
    std::vector<CorpusEntry> corpus{
        {"n=2 r=1 E12=1", rank_one(2, {{0, 1, 1}})},
        {"n=2 r=1 E12=2", rank_one(2, {{0, 1, 2}})},
        {"n=3 r=1 E13=E23=1", rank_one(3, {{0, 2, 1}, {1, 2, 1}})},
    };
    if (auto found = search_rank_two_system(search)) corpus.push_back(std::move(*found));
    return corpus;
}

SurveyReport survey_conjecture(const std::vector<CorpusEntry>& corpus, const SurveyOptions& opt) {
    SurveyReport report;
    for (std::size_t e = 0; e < corpus.size(); ++e) {
        const CorpusEntry& entry = corpus[e];
        SurveyEntryReport out;
        out.name = entry.name;
        out.n = entry.sys.n;
        validate(entry.sys);
        const HypothesisFlags h = check_hypotheses(entry.sys);
        if (!h.dim_is_n_minus_1) {
            out.skipped = true;
            out.warning = "skipped: dim " +
                          (h.dim.exact ? std::to_string(h.dim.value())
                                       : "in [" + std::to_string(h.dim.lower) + ", " + std::to_string(h.dim.upper) + "]") +
                          " is not exactly n - 1 = " + std::to_string(entry.sys.n - 1);
            report.entries.push_back(std::move(out));
            continue;
        }
        if (!h.B_commutative) {
            out.skipped = true;
            out.warning = "skipped: B = <x1, ..., x" + std::to_string(entry.sys.n - 1) + "> is not commutative";
            report.entries.push_back(std::move(out));
            continue;
        }
        const AlgebraPtr ctx = Algebra::make(entry.sys, true);
        const int n = entry.sys.n;

        for (int i = 0; i < opt.characters; ++i) {
            SurveyModule mod;
            mod.kind = "induced";
            mod.seed = module_seed(opt.seed, e, i);
            std::mt19937_64 rng(mod.seed);
            Character chi{ctx, {}};
            for (int j = 0; j + 1 < n; ++j) {
                chi.values.push_back(random_small_scalar(ctx->field(), rng));
                mod.description += (j ? ", " : "") + std::string("chi(x") + std::to_string(j + 1) +
                                   ") = " + format_scalar(chi.values.back(), ctx->field());
            }
            const InducedModule W(chi);
            const InducedVerdict v = induced_simplicity_verdict(W);
            if (induced_growth_is_linear(W, 8)) {
                mod.gk = 1;
            } else {
                mod.gk = -1;
                out.violations.push_back("induced module seed " + std::to_string(mod.seed) +
                                         ": growth of W_0 V_0^m is not 2m + 1");
            }
            mod.simplicity_certified = v.simple;
            mod.evidence = v.certificate;
            mod.bound_check = mod.gk >= 0 && gk_dimension_bound_check(mod.gk, entry.sys).pass;
            out.modules.push_back(std::move(mod));
        }

        for (int i = 0; i < opt.unitaries; ++i) {
            SurveyModule mod;
            mod.kind = "contraction";
            mod.seed = module_seed(opt.seed, e, 500 + i);
            std::mt19937_64 rng(mod.seed);
            const int degree = 1 + i % std::max(1, opt.max_degree);
            // For n = 2 alternate Newton-polygon candidates with unrestricted samples.
            const Element f = (n == 2 && i % 2 == 0) ? random_irreducible_candidate(ctx, degree, rng)
                                                     : random_unitary(ctx, degree, rng);
            mod.description = "f = " + format_element(f);
            const ContractionModule M(f);
            const GkReport gk = gk_certified(M);
            mod.gk = gk.exact ? gk.value() : -1;
            if (!gk.exact)
                out.violations.push_back("contraction seed " + std::to_string(mod.seed) + ": gk not certified exactly");
            if (n == 2) {
                const SimplicityCertificate cert = certify_simplicity_contraction(M, opt.samples, opt.K, mod.seed);
                mod.simplicity_certified = cert.all_generated;
                std::size_t ok = 0;
                for (const auto& s : cert.samples) ok += s.generated;
                mod.evidence = std::to_string(ok) + "/" + std::to_string(cert.samples.size()) +
                               " samples generate, max |k| " + std::to_string(cert.max_k_used);
                if (!cert.all_generated)
                    for (const auto& s : cert.samples)
                        if (!s.generated) {
                            mod.evidence += "; first failure (" + s.origin + "): " + s.failure;
                            break;
                        }
            } else {
                const CriticalityVerdict c = criticality_check(M, M.generator(), std::max(opt.K, M.degree()), mod.seed);
                mod.simplicity_certified = false;
                mod.evidence = std::string("simplicity not certified for n >= 3; criticality on the generator: ") +
                               (c.torsion ? "torsion quotient" : "not torsion") + ", rank " + std::to_string(c.rank);
            }
            mod.bound_check = mod.gk >= 0 && gk_dimension_bound_check(mod.gk, entry.sys).pass;
            out.modules.push_back(std::move(mod));
        }

        for (const auto& mod : out.modules) {
            if (!mod.bound_check) ++report.bound_violations;
            if (!mod.simplicity_certified) continue;
            out.multiset.push_back(mod.gk);
            if (mod.gk != 1 && mod.gk != n - 1)
                out.violations.push_back(mod.kind + " seed " + std::to_string(mod.seed) + " (" + mod.description +
                                         "): simple with gk " + std::to_string(mod.gk));
        }
        std::sort(out.multiset.begin(), out.multiset.end());
        out.conforms = out.violations.empty();
        report.conforms = report.conforms && out.conforms;
        report.entries.push_back(std::move(out));
    }
    return report;
}

}  // namespace qtorus
