#include <doctest.h>

#include <random>

#include "qtorus/element_io.hpp"
#include "qtorus/error.hpp"
#include "qtorus/skew.hpp"
#include "test_support.hpp"

using namespace qtorus;
using namespace qtorus::testing;

namespace {

Element P(const std::string& s, const AlgebraPtr& A) { return parse_element(s, A); }

// Random unitary element of degree d in t with monomial terminal coefficients.
Element random_unitary(std::mt19937_64& rng, const AlgebraPtr& A, int d) {
    const int n = A->n();
    std::uniform_int_distribution<int> coin(0, 2);
    auto base_monomial = [&](bool fancy) {
        Exponent b = random_exponent(rng, static_cast<std::size_t>(n), 1);
        b.back() = 0;
        return Element::monomial(A, b, random_scalar(rng, A->field(), fancy));
    };
    Element f = base_monomial(false);
    for (int i = 1; i < d; ++i)
        if (coin(rng)) {
            Element beta = base_monomial(true) + base_monomial(false);
            f += t_power(A, i) * beta;
        }
    f += t_power(A, d) * base_monomial(false);
    return f;
}

}  // namespace

TEST_CASE("decompose examples") {
    auto A = make_algebra({IntMatrix(2, 2)});
    SkewForm s = decompose(Element::monomial(A, {1, 0}));
    CHECK(s.coeffs.size() == 1);
    CHECK(s.coeff(0) == Element::monomial(A, {1, 0}));
    s = decompose(Element::monomial(A, {0, 2}) + Element::monomial(A, {1, 1}));
    CHECK(s.low() == 1);
    CHECK(s.high() == 2);
    CHECK(s.coeff(2) == Element::scalar(A, 1));
    CHECK(s.coeff(1) == Element::monomial(A, {1, 0}));
    CHECK(decompose(Element(A)).is_zero());

    // With E12 = 1 the right coefficient picks up a twist: x1 t = q t x1.
    auto B = plane();
    Scalar q = B->field().parameter(0);
    s = decompose(Element::monomial(B, {1, 1}));
    CHECK(s.coeff(1) == Element::monomial(B, {1, 0}, q));
    CHECK(recompose(s) == Element::monomial(B, {1, 1}));
}

TEST_CASE("sigma examples and automorphism") {
    auto A = plane();
    Scalar q = A->field().parameter(0);
    Element x1 = Element::generator(A, 0);
    CHECK(sigma(Element::scalar(A, 7), 3) == Element::scalar(A, 7));
    CHECK(sigma(x1, 1) == x1.scaled(q.inverse()));
    CHECK(sigma(sigma(x1 + Element::scalar(A, 2), 1), -1) == x1 + Element::scalar(A, 2));
    CHECK_THROWS_AS(sigma(Element::generator(A, 1), 1), Error);

    std::mt19937_64 rng(11);
    for (int it = 0; it < 60; ++it) {
        FieldMode mode = it % 3 == 0 ? FieldMode::root_of_unity(5) : FieldMode::generic(1 + it % 2);
        auto S = random_algebra(rng, 3, 2, mode);
        auto base = [&] {
            Element e = random_element(rng, S, 3, 2);
            Element out(S);
            for (const auto& [a, c] : e.terms()) {
                Exponent b = a;
                b.back() = 0;
                out.add_term(b, c);
            }
            return out;
        };
        Element b1 = base(), b2 = base();
        const std::int64_t k = it % 5 - 2;
        CHECK(sigma(b1 * b2, k) == sigma(b1, k) * sigma(b2, k));
        CHECK(sigma(b1, 1) == t_power(S, 1) * b1 * t_power(S, -1));
        CHECK(sigma(sigma(b1, k), -k) == b1);
    }
}

TEST_CASE("decompose round trip") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 1000; ++it) {
        FieldMode mode = it % 4 == 0 ? FieldMode::root_of_unity(3 + it % 4) : FieldMode::generic(1 + it % 2);
        auto S = random_algebra(rng, 2 + it % 3, 3, mode);
        Element a = random_element(rng, S, 4, 3);
        SkewForm s = decompose(a);
        for (const auto& [k, beta] : s.coeffs) CHECK(in_base(beta));
        CHECK(recompose(s) == a);
    }
}

TEST_CASE("unitary detection and normalization") {
    auto A = plane(FieldMode::generic(1), true);
    CHECK(is_unitary(P("t^2 + x1 t + 1", A)));
    CHECK_FALSE(is_unitary(P("t + (1 + x1)", A)));
    CHECK(is_unitary(P("x1 t^-1 + t", A)));
    CHECK_THROWS_AS(is_unitary(Element(A)), Error);

    UnitaryForm u = normalize_unitary(P("x1 t^-1 + t", A));
    CHECK(u.degree() == 2);
    CHECK(u.c[0] == Element::scalar(A, 1));
    CHECK(is_unit(u.c[2]));
    CHECK_THROWS_AS(normalize_unitary(P("t + 1 + x1", A)), Error);
    CHECK_THROWS_AS(normalize_unitary(Element(A)), Error);

    // Same right ideal: the normalized form is the original times a unit.
    std::mt19937_64 rng(13);
    for (int it = 0; it < 40; ++it) {
        auto S = random_algebra(rng, 2 + it % 2, 2, FieldMode::generic(1));
        Element f = random_unitary(rng, S, 1 + it % 3) * t_power(S, it % 3 - 1);
        UnitaryForm g = normalize_unitary(f);
        Element shifted = f * t_power(S, -decompose(f).low());
        CHECK(g.f == shifted * decompose(shifted).coeff(0).unit_inverse());
    }
}

TEST_CASE("reduce_mod examples") {
    auto A = plane(FieldMode::generic(1), true);
    Scalar q = A->field().parameter(0);
    Reducer r(normalize_unitary(P("t - x1", A)));
    std::vector<Element> v = r.reduce(P("t^2", A));
    REQUIRE(v.size() == 1);
    CHECK(v[0] == Element::monomial(A, {2, 0}, q));
    CHECK(r.residue(r.form().f).is_zero());

    Reducer r2(normalize_unitary(P("t^2 - 1", A)));
    v = r2.reduce(P("t^3", A));
    CHECK(v[0].is_zero());
    CHECK(v[1] == Element::scalar(A, 1));
    CHECK(r2.reduce(P("t^-1", A))[1] == Element::scalar(A, 1));
}

TEST_CASE("reduce_mod witness and idempotence") {
    std::mt19937_64 rng(14);
    for (int it = 0; it < 80; ++it) {
        FieldMode mode = it % 4 == 0 ? FieldMode::root_of_unity(4) : FieldMode::generic(1 + it % 2);
        auto S = random_algebra(rng, 2 + it % 2, 2, mode);
        Reducer r(normalize_unitary(random_unitary(rng, S, 1 + it % 3)));
        Element a = random_element(rng, S, 4, 3);
        Element h(S);
        std::vector<Element> v = r.reduce(a, &h);
        for (const auto& beta : v) CHECK(in_base(beta));
        Element res = r.from_coords(v);
        CHECK(a == r.form().f * h + res);
        CHECK(r.reduce(res) == v);
    }
}

TEST_CASE("right and left division") {
    auto C = make_algebra({IntMatrix(2, 2)}, FieldMode::generic(1), true);
    Division dv = right_divide(P("t^2", C), P("t - 1", C));
    CHECK(dv.quotient == P("t + 1", C));
    CHECK(dv.remainder == Element::scalar(C, 1));

    auto A = plane(FieldMode::generic(1), true);
    Scalar q = A->field().parameter(0);
    Element f = P("t - x1", A);
    dv = right_divide(f, f);
    CHECK(dv.quotient == Element::scalar(A, 1));
    CHECK(dv.remainder.is_zero());
    // Left-ideal remainder; the right-ideal residue of t^2 is q x1^2.
    dv = right_divide(P("t^2", A), f);
    CHECK(dv.remainder == Element::monomial(A, {2, 0}, q.inverse()));
    CHECK(dv.quotient * f + dv.remainder == P("t^2", A));

    CHECK_THROWS_AS(right_divide(P("t^2", A), P("(1 + x1) t", A), false), Error);

    std::mt19937_64 rng(15);
    for (int it = 0; it < 80; ++it) {
        FieldMode mode = it % 4 == 0 ? FieldMode::root_of_unity(6) : FieldMode::generic(1 + it % 2);
        auto S = random_algebra(rng, 2 + it % 2, 2, mode);
        Element g = random_element(rng, S, 4, 3);
        Element d = random_element(rng, S, 3, 2);
        if (d.is_zero()) continue;
        const std::int64_t top = decompose(d).high();
        if (is_unit(decompose(d).coeff(top))) {
            Division r = right_divide(g, d, false);
            CHECK(r.quotient * d + r.remainder == g);
            CHECK((r.remainder.is_zero() || decompose(r.remainder).high() < top));
            Division l = left_divide(g, d);
            CHECK(d * l.quotient + l.remainder == g);
            CHECK((l.remainder.is_zero() || decompose(l.remainder).high() < top));
        } else if (base_is_commutative(S)) {
            Division r = right_divide(g, d);
            CHECK(r.multiplier * g == r.quotient * d + r.remainder);
            CHECK(in_base(r.multiplier));
            CHECK((r.remainder.is_zero() || decompose(r.remainder).high() < top));
        } else {
            CHECK_THROWS_AS(right_divide(g, d), Error);
        }
    }
}

TEST_CASE("Ore multiples") {
    auto A = plane(FieldMode::generic(1), true);
    Scalar q = A->field().parameter(0);
    Element x1 = Element::generator(A, 0);
    OreMultiple o = ore_right_multiple(P("t + 1", A), x1);
    CHECK(o.beta_prime == Element::monomial(A, {2, 0}, q));
    CHECK(o.alpha_prime == P("q^-1 x1 t + q x1", A));
    o = ore_right_multiple(P("x1^2 + 3", A), x1);
    CHECK(o.beta_prime == x1);
    CHECK(o.alpha_prime == P("x1^2 + 3", A));
    o = ore_right_multiple(P("t^3", A), x1 + Element::scalar(A, 2));
    CHECK(o.beta_prime == sigma(x1 + Element::scalar(A, 2), -3));
    CHECK(o.alpha_prime == P("t^3", A));

    auto N = make_algebra({IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}});
    CHECK_THROWS_AS(ore_right_multiple(Element::generator(N, 2), Element::generator(N, 0)), Error);

    std::mt19937_64 rng(16);
    for (int it = 0; it < 40; ++it) {
        auto S = make_algebra({IntMatrix{{0, 0, 1}, {0, 0, -2}, {-1, 2, 0}}}, FieldMode::generic(1));
        Element a = random_element(rng, S, 4, 2);
        Element b(S);
        Element raw = random_element(rng, S, 2, 2);
        for (const auto& [e, c] : raw.terms()) b.add_term({e[0], e[1], 0}, c);
        if (b.is_zero()) continue;
        OreMultiple m = ore_right_multiple(a, b);
        CHECK_FALSE(m.beta_prime.is_zero());
        CHECK(a * m.beta_prime == b * m.alpha_prime);
    }
}

TEST_CASE("monomial root screens") {
    auto A = plane(FieldMode::generic(1), true);
    auto found = monomial_right_root_screen(P("t^2 - 1", A));
    REQUIRE(found);
    CHECK(found->linear == P("t - 1", A));

    Element f = P("(t - x1)(t - 1)", A);
    found = monomial_right_root_screen(f);
    REQUIRE(found);
    CHECK(found->linear == P("t - 1", A));
    CHECK(found->cofactor * found->linear == f);

    auto left = monomial_left_root_screen(f);
    REQUIRE(left);
    CHECK(left->linear == P("t - x1", A));
    CHECK(left->linear * left->cofactor == f);

    CHECK_FALSE(monomial_right_root_screen(P("t^2 - x1", A)));
    CHECK_FALSE(monomial_left_root_screen(P("t^2 - x1", A)));

    // Planted factors with twisted coefficients are recovered.
    std::mt19937_64 rng(17);
    for (int it = 0; it < 12; ++it) {
        FieldMode mode = it % 3 == 0 ? FieldMode::root_of_unity(5) : FieldMode::generic(1);
        auto S = random_algebra(rng, 2 + it % 2, 2, mode, true);
        Exponent b = random_exponent(rng, static_cast<std::size_t>(S->n()), 1);
        b.back() = 0;
        std::vector<std::int64_t> e(static_cast<std::size_t>(S->field().parameter_count()), it % 3 - 1);
        Scalar mu = Scalar(Rational(it % 2 ? 2 : -3, it % 4 ? 1 : 5)) * S->field().q_power(e);
        Element lin = t_power(S, 1) - Element::monomial(S, b, mu);
        Element g = random_unitary(rng, S, 1 + it % 2);
        Element prod = it % 2 ? g * lin : lin * g;
        auto hit = it % 2 ? monomial_right_root_screen(prod) : monomial_left_root_screen(prod);
        REQUIRE_MESSAGE(hit, it << " " << format_element(prod) << " | " << format_element(lin));
        if (it % 2) CHECK(hit->cofactor * hit->linear == prod);
        else CHECK(hit->linear * hit->cofactor == prod);
    }
}
