#include <doctest.h>

#include "qtorus/element_io.hpp"
#include "qtorus/error.hpp"
#include "qtorus/finite_module.hpp"
#include "qtorus/hypotheses.hpp"
#include "qtorus/induced.hpp"
#include "qtorus/survey.hpp"
#include "test_support.hpp"

using namespace qtorus;
using namespace qtorus::testing;

namespace {

Scalar S(const std::string& s, const AlgebraPtr& A) { return parse_scalar(s, A->field()); }

}  // namespace

TEST_CASE("induced weights") {
    auto A = plane(FieldMode::generic(1), true);
    InducedModule W(Character{A, {Scalar(1)}});
    for (int k = -4; k <= 4; ++k) CHECK(W.weight(k, 0) == A->q_power({-k}));
    InducedModule Wc(Character{A, {Scalar(Rational(3, 2))}});
    CHECK(Wc.weight(0, 0) == Scalar(Rational(3, 2)));
    // Right action bookkeeping: w_k x1 t = w_{k+1} scaled by wt(k, 1).
    auto v = W.act(W.act(W.basis(2), 0), 1);
    CHECK(v == InducedModule::Vec{{3, A->q_power({-2})}});

    auto R = plane(FieldMode::root_of_unity(3), true);
    InducedModule Wr(Character{R, {Scalar(1)}});
    CHECK(Wr.weight(1, 0) == R->field().zeta().pow(-1));
    CHECK(Wr.weight(3, 0) == Scalar(1));
    CHECK(Wr.weight(4, 0) == Wr.weight(1, 0));

    CHECK_THROWS_AS(InducedModule(Character{A, {Scalar(0)}}), Error);
    auto N = make_algebra({IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}}, FieldMode::generic(1), true);
    CHECK_THROWS_AS(InducedModule(Character{N, {Scalar(1), Scalar(1)}}), Error);
}

TEST_CASE("induced simplicity verdicts") {
    auto A = plane(FieldMode::generic(1), true);
    InducedVerdict g = induced_simplicity_verdict(InducedModule(Character{A, {Scalar(1)}}));
    CHECK(g.simple);
    CHECK(g.distinct_checked == 50);
    CHECK_FALSE(g.period.has_value());

    for (int m : {2, 3, 5}) {
        auto R = plane(FieldMode::root_of_unity(m), true);
        InducedVerdict r = induced_simplicity_verdict(InducedModule(Character{R, {Scalar(2)}}));
        CHECK_FALSE(r.simple);
        REQUIRE(r.period.has_value());
        CHECK(*r.period == m);
        CHECK(r.witness_closed);
        CHECK(r.witness_proper);
        CHECK(r.quotient_dimension == m);
    }
    // E_12 = 2 at m = 4: period 2.
    auto R4 = make_algebra({IntMatrix{{0, 2}, {-2, 0}}}, FieldMode::root_of_unity(4), true);
    CHECK(*induced_simplicity_verdict(InducedModule(Character{R4, {Scalar(1)}})).period == 2);

    // n = 3 with B = <e1, e2> commutative; weights (q^-k, q^-k).
    auto T = make_algebra({IntMatrix{{0, 0, 1}, {0, 0, 1}, {-1, -1, 0}}}, FieldMode::generic(1), true);
    InducedModule W3(Character{T, {Scalar(1), Scalar(1)}});
    CHECK(W3.weight(2, 0) == T->q_power({-2}));
    CHECK(W3.weight(2, 1) == T->q_power({-2}));
    CHECK(induced_simplicity_verdict(W3).simple);
    // The center is not trivial here (e1 - e2 is central), yet the weights separate.
    CHECK(center_lattice(T->system()).rank == 1);
}

TEST_CASE("hypothesis flags") {
    auto A = plane(FieldMode::generic(1), true);
    HypothesisFlags h = check_hypotheses(A->system());
    CHECK(h.B_commutative);
    CHECK(h.center_trivial);
    CHECK(h.dim_is_1);
    CHECK(h.dim_is_n_minus_1);

    auto R = plane(FieldMode::root_of_unity(3), true);
    HypothesisFlags r = check_hypotheses(R->system());
    CHECK(r.B_commutative);
    CHECK_FALSE(r.center_trivial);
    CHECK(r.center_rank == 2);
    CHECK_FALSE(r.dim_is_1);
    CHECK_FALSE(r.dim_is_n_minus_1);

    // E = e12 - e21 with t = e2: B = <e1, e3>.
    ExponentSystem sys{3, FieldMode::generic(1), {IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}}};
    ExponentSystem s = apply_split(sys, make_split(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 1));
    HypothesisFlags t = check_hypotheses(s);
    CHECK(t.B_commutative);
    CHECK_FALSE(t.center_trivial);
    CHECK(t.center_rank == 1);
    CHECK_FALSE(t.dim_is_1);
    CHECK(t.dim_is_n_minus_1);
}

TEST_CASE("gk dimension bound check") {
    auto A = plane(FieldMode::generic(1), true);
    CHECK(gk_dimension_bound_check(1, A->system()).pass);
    auto T = make_algebra({IntMatrix{{0, 0, 1}, {0, 0, 1}, {-1, -1, 0}}});
    CHECK(gk_dimension_bound_check(2, T->system()).pass);
    CHECK(gk_dimension_bound_check(1, T->system()).pass);
    CHECK_FALSE(gk_dimension_bound_check(0, A->system()).pass);
}

TEST_CASE("clock and shift modules") {
    for (int m : {2, 3, 5, 7}) {
        auto R = plane(FieldMode::root_of_unity(m));
        FiniteDimModule M = clock_shift_module(R);
        CHECK(verify_relations(M).empty());
        FiniteVerdict v = certify_simplicity_finite(M);
        CHECK(v.kind == FiniteVerdict::Kind::AbsolutelySimple);
        CHECK(v.span_dim == static_cast<std::size_t>(m * m));
    }
    auto R3 = plane(FieldMode::root_of_unity(3));
    FiniteDimModule M3 = clock_shift_module(R3, S("2 z", R3));
    CHECK(verify_relations(M3).empty());
    CHECK(M3.X[0][1][1] == S("2 z^2", R3));

    auto R2 = plane(FieldMode::root_of_unity(2));
    FiniteDimModule M2 = clock_shift_module(R2);
    CHECK(M2.X[0][1][1] == Scalar(-1));
    FiniteDimModule D = direct_sum(M2, M2);
    CHECK(verify_relations(D).empty());
    FiniteVerdict w = certify_simplicity_finite(D);
    REQUIRE(w.kind == FiniteVerdict::Kind::InvariantSubspace);
    CHECK(w.span_dim <= 8);
    CHECK(w.subspace.size() < 4);
    // The witness is invariant under every generator.
    for (const auto& X : D.X)
        for (const auto& u : w.subspace) {
            std::vector<Scalar> img(4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) img[i] += X[i][j] * u[j];
            // Rank stays the same after adding the image.
            ScalarMatrix rows = w.subspace;
            rows.push_back(img);
            std::size_t rank = 0;
            for (std::size_t c = 0; c < 4 && rank < rows.size(); ++c) {
                std::size_t p = rank;
                while (p < rows.size() && rows[p][c].is_zero()) ++p;
                if (p == rows.size()) continue;
                std::swap(rows[p], rows[rank]);
                for (std::size_t r = rank + 1; r < rows.size(); ++r) {
                    const Scalar f = rows[r][c] / rows[rank][c];
                    for (std::size_t k = 0; k < 4; ++k) rows[r][k] -= f * rows[rank][k];
                }
                ++rank;
            }
            CHECK(rank == w.subspace.size());
        }

    auto G = plane(FieldMode::generic(1));
    CHECK_THROWS_AS(clock_shift_module(G), Error);
    // d = 1 with nonzero scalars (q central mod 1 is not available; use E = 0).
    auto Z = make_algebra({IntMatrix(2, 2)}, FieldMode::root_of_unity(2));
    FiniteDimModule one{Z, 1, {ScalarMatrix{{Scalar(3)}}, ScalarMatrix{{Scalar(-2)}}}};
    CHECK(verify_relations(one).empty());
    FiniteVerdict o = certify_simplicity_finite(one);
    CHECK(o.kind == FiniteVerdict::Kind::AbsolutelySimple);
    CHECK(o.span_dim == 1);
}

TEST_CASE("rank two corpus search") {
    std::uint64_t examined = 0;
    auto found = search_rank_two_system({}, &examined);
    REQUIRE(found.has_value());
    CHECK(found->sys.r() == 2);
    const HypothesisFlags h = check_hypotheses(found->sys);
    CHECK(h.B_commutative);
    CHECK(h.center_trivial);
    CHECK(h.dim_is_n_minus_1);
    // The all-zero candidate comes first and is commutative.
    CHECK(examined > 1);
    CorpusSearch tiny;
    tiny.max_candidates = 3;
    CHECK_FALSE(search_rank_two_system(tiny).has_value());
    CHECK(default_corpus().size() == 4);
    CHECK(default_corpus(tiny).size() == 3);
}

TEST_CASE("survey") {
    CHECK(survey_conjecture({}).entries.empty());
    CHECK(survey_conjecture({}).conforms);

    SurveyOptions opt;
    opt.samples = 6;
    opt.characters = 3;
    opt.unitaries = 3;
    const auto corpus = default_corpus();
    const SurveyReport rep = survey_conjecture(corpus, opt);
    CHECK(rep.conforms);
    CHECK(rep.bound_violations == 0);
    for (const auto& e : rep.entries) {
        CHECK_FALSE(e.skipped);
        CHECK(e.conforms);
        CHECK_FALSE(e.multiset.empty());
        for (const int g : e.multiset) CHECK((g == 1 || g == e.n - 1));
        for (const auto& m : e.modules)
            if (m.kind == "contraction") CHECK(m.gk == e.n - 1);
    }
    // Same seed, same report.
    const SurveyReport again = survey_conjecture(corpus, opt);
    REQUIRE(again.entries.size() == rep.entries.size());
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        REQUIRE(again.entries[i].modules.size() == rep.entries[i].modules.size());
        for (std::size_t k = 0; k < rep.entries[i].modules.size(); ++k) {
            CHECK(again.entries[i].modules[k].description == rep.entries[i].modules[k].description);
            CHECK(again.entries[i].modules[k].evidence == rep.entries[i].modules[k].evidence);
        }
    }

    ExponentSystem root{2, FieldMode::root_of_unity(3), {IntMatrix{{0, 1}, {-1, 0}}}};
    const SurveyReport skipped = survey_conjecture({{"root", root}}, opt);
    REQUIRE(skipped.entries.size() == 1);
    CHECK(skipped.entries[0].skipped);
    CHECK(skipped.entries[0].warning.find("dim 2") != std::string::npos);
    CHECK(skipped.conforms);
}
