#include <doctest.h>

#include <random>

#include "qtorus/algebra.hpp"
#include "qtorus/element_io.hpp"
#include "qtorus/error.hpp"
#include "test_support.hpp"

using namespace qtorus;
using namespace qtorus::testing;

TEST_CASE("cocycle examples") {
    auto A = plane();  // n = 2, E12 = 1
    Field F = A->field();
    Scalar q = F.parameter(0);
    CHECK(A->cocycle({1, 0}, {0, 1}) == Scalar(1));
    CHECK(A->cocycle({0, 1}, {1, 0}) == q.inverse());
    CHECK(A->cocycle({3, -2}, {0, 0}) == Scalar(1));
}

TEST_CASE("multiplication examples") {
    auto A = plane();
    Scalar q = A->field().parameter(0);
    Element x1 = Element::generator(A, 0), x2 = Element::generator(A, 1);
    CHECK(x1 * x2 == Element::monomial(A, {1, 1}));
    CHECK(x2 * x1 == Element::monomial(A, {1, 1}, q.inverse()));
    Element one = Element::scalar(A, 1);
    Element a = x1 + x2.scaled(q) - one;
    CHECK(a * one == a);
    CHECK(one * a == a);
}

TEST_CASE("commutation scalars") {
    auto A = plane();
    Scalar q = A->field().parameter(0);
    CHECK(A->commutation_scalar({2, 5}, {2, 5}) == Scalar(1));
    CHECK(A->commutation_scalar({1, 0}, {0, 1}) == q);
    auto R = plane(FieldMode::root_of_unity(3));
    CHECK(R->commutation_scalar({3, 0}, {0, 1}) == Scalar(1));
    // commutation scalar equals lambda(a,b)/lambda(b,a)
    std::mt19937_64 rng(2);
    for (int it = 0; it < 100; ++it) {
        auto S = random_algebra(rng, 4, 3, it % 2 ? FieldMode::root_of_unity(6) : FieldMode::generic(2));
        Exponent a = random_exponent(rng, 4, 3), b = random_exponent(rng, 4, 3);
        CHECK(S->commutation_scalar(a, b) == S->cocycle(a, b) / S->cocycle(b, a));
    }
}

TEST_CASE("q_ii = 1 and q_ij q_ji = 1 as scalars") {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 20; ++it) {
        auto S = random_algebra(rng, 4, 3, FieldMode::generic(2));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Exponent ei(4, 0), ej(4, 0);
                ei[i] = 1;
                ej[j] = 1;
                if (i == j) CHECK(S->commutation_scalar(ei, ei) == Scalar(1));
                CHECK(S->commutation_scalar(ei, ej) * S->commutation_scalar(ej, ei) == Scalar(1));
            }
    }
}

TEST_CASE("associativity and no zero divisors") {
    std::mt19937_64 rng(6);
    for (int it = 0; it < 60; ++it) {
        FieldMode mode = it % 3 == 0 ? FieldMode::root_of_unity(4) : FieldMode::generic(1 + it % 2);
        auto S = random_algebra(rng, 3, 2, mode);
        Element a = random_element(rng, S, 3, 2), b = random_element(rng, S, 3, 2), c = random_element(rng, S, 3, 2);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero() && !b.is_zero()) CHECK_FALSE((a * b).is_zero());
    }
}

TEST_CASE("centrality, units and subalgebras") {
    auto A = plane();
    CHECK(is_central(Element::scalar(A, 5)));
    CHECK_FALSE(is_central(Element::generator(A, 0)));
    auto R = plane(FieldMode::root_of_unity(3));
    CHECK(is_central(Element::monomial(R, {3, 0}) + Element::monomial(R, {0, 3})));
    CHECK_FALSE(is_central(Element::monomial(R, {3, 0}) + Element::monomial(R, {0, 1})));

    CHECK(is_unit(Element::monomial(A, {2, -1}, 5)));
    CHECK_FALSE(is_unit(Element::scalar(A, 1) + Element::generator(A, 0)));
    CHECK_FALSE(is_unit(Element(A)));

    Element u = Element::monomial(A, {2, -1}, A->field().parameter(0) + Scalar(3));
    CHECK(u * u.unit_inverse() == Element::scalar(A, 1));
    CHECK(u.unit_inverse() * u == Element::scalar(A, 1));

    CHECK(in_subalgebra(Element::scalar(A, 7), span_lattice({}, 2)));
    CHECK_FALSE(in_subalgebra(Element::generator(A, 1), span_lattice({{1, 0}}, 2)));
    CHECK(in_subalgebra(Element::monomial(A, {2, 4}), span_lattice({{1, 2}}, 2)));
}

TEST_CASE("printer and parser") {
    auto A = plane(FieldMode::generic(1), true);
    Scalar q = A->field().parameter(0);
    Element t = Element::generator(A, 1), x = Element::generator(A, 0);
    CHECK(format_element(t * t - x) == "t^2 - x1");
    CHECK(parse_element("t^2 - x1", A) == t * t - x);
    CHECK(parse_element("x2", A) == t);
    CHECK(parse_element("t + (1 + x1)", A) == t + Element::scalar(A, 1) + x);
    CHECK(parse_element("q^-1 x1", A) == x.scaled(q.inverse()));
    CHECK(parse_element("x1^-1", A) * x == Element::scalar(A, 1));
    CHECK(parse_element("t x1", A) == t * x);
    CHECK(parse_element("(q^2 - 1)/(q + 1)", A) == Element::scalar(A, q - Scalar(1)));
    CHECK_THROWS_AS(parse_element("1/(1 + x1)", A), Error);
    CHECK_THROWS_AS(parse_element("y1", A), Error);
    CHECK_THROWS_AS(parse_element("x1 +", A), Error);
    CHECK_THROWS_AS(parse_element("(x1", A), Error);

    auto R = plane(FieldMode::root_of_unity(3));
    Scalar z = R->field().zeta();
    CHECK(parse_element("z^3", R) == Element::scalar(R, 1));
    CHECK(format_scalar(z * z, R->field()) == "-z - 1");
    CHECK(parse_scalar("q/(q - 1)", Field(FieldMode::generic(1))) ==
          Field(FieldMode::generic(1)).parameter(0) / (Field(FieldMode::generic(1)).parameter(0) - Scalar(1)));
}

TEST_CASE("round trip on random elements") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 300; ++it) {
        FieldMode mode = it % 3 == 0 ? FieldMode::root_of_unity(2 + it % 7) : FieldMode::generic(1 + it % 2);
        auto S = random_algebra(rng, 2 + it % 3, 2, mode, it % 2 == 0);
        Element a = random_element(rng, S, 4, 3, true);
        std::string text = format_element(a);
        Element b = parse_element(text, S);
        CHECK_MESSAGE(a == b, text);
        CHECK(format_element(b) == text);
    }
}
