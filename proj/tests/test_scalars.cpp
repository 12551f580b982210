#include <doctest.h>

#include <complex>
#include <random>

#include "qtorus/error.hpp"
#include "qtorus/scalar.hpp"

using namespace qtorus;

namespace {

// Evaluation at a point is a field homomorphism away from poles; used as an
// independent check of canonical-form arithmetic.
Rational eval(const QPoly& p, const std::vector<Rational>& at) {
    Rational s = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            Rational base = e[i] >= 0 ? at[i] : Rational(1) / at[i];
            for (int k = 0; k < std::abs(e[i]); ++k) t *= base;
        }
        s += t;
    }
    return s;
}

Rational eval(const Scalar& x, const std::vector<Rational>& at) {
    if (x.is_rational()) return x.rational();
    const RatFunc& f = *x.ratfunc();
    return eval(f.num(), at) / eval(f.den(), at);
}

std::complex<double> eval_root(const Scalar& x, int m) {
    if (x.is_rational()) return x.rational().get_d();
    const auto& c = x.cyclo()->coeffs();
    std::complex<double> z = std::polar(1.0, 2 * M_PI / m), s = 0, p = 1;
    for (const auto& a : c) {
        s += a.get_d() * p;
        p *= z;
    }
    return s;
}

Scalar random_generic(std::mt19937_64& rng, const Field& F) {
    std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2);
    Scalar num, den;
    for (int t = 0; t < 3; ++t) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(F.parameter_count()));
        for (auto& x : e) x = ex(rng);
        num += Scalar(coef(rng)) * F.q_power(e);
        for (auto& x : e) x = ex(rng);
        den += Scalar(coef(rng)) * F.q_power(e);
    }
    if (den.is_zero()) den = Scalar(1);
    return num / den;
}

}  // namespace

TEST_CASE("generic scalar arithmetic") {
    Field F(FieldMode::generic(1));
    Scalar q = F.parameter(0);
    CHECK(q * q.inverse() == Scalar(1));
    Scalar qm1 = q - Scalar(1);
    CHECK(q / qm1 + Scalar(-1) / qm1 == Scalar(1));
    CHECK_THROWS_AS(Scalar(0).inverse(), Error);
    CHECK_THROWS_AS(q / Scalar(0), Error);

    Field F2(FieldMode::generic(2));
    std::vector<std::int64_t> e{2, -1};
    Scalar expect = F2.parameter(0) * F2.parameter(0) / F2.parameter(1);
    CHECK(F2.q_power(e) == expect);
    CHECK(F2.q_power(std::vector<std::int64_t>{0, 0}) == Scalar(1));
}

TEST_CASE("canonical form gives structural equality") {
    Field F(FieldMode::generic(2));
    Scalar a = F.parameter(0), b = F.parameter(1);
    // (a^2 - b^2)/(a - b) == a + b
    CHECK((a * a - b * b) / (a - b) == a + b);
    // (a b + a)/(b + 1) == a
    CHECK((a * b + a) / (b + Scalar(1)) == a);
    CHECK((a / b) * (b / a) == Scalar(1));
}

TEST_CASE("field axioms on random generic scalars (evaluation oracle)") {
    std::mt19937_64 rng(7);
    for (int r = 1; r <= 2; ++r) {
        Field F(FieldMode::generic(r));
        std::vector<Rational> pt{Rational(3, 7), Rational(-5, 2)};
        pt.resize(static_cast<std::size_t>(r));
        for (int it = 0; it < 40; ++it) {
            Scalar x = random_generic(rng, F), y = random_generic(rng, F), z = random_generic(rng, F);
            CHECK((x + y) + z == x + (y + z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
            CHECK(eval(x * y - z, pt) == eval(x, pt) * eval(y, pt) - eval(z, pt));
        }
    }
}

TEST_CASE("q_power is a homomorphism") {
    Field F(FieldMode::generic(2));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int it = 0; it < 50; ++it) {
        std::vector<std::int64_t> a{d(rng), d(rng)}, b{d(rng), d(rng)}, s{a[0] + b[0], a[1] + b[1]};
        CHECK(F.q_power(a) * F.q_power(b) == F.q_power(s));
    }
}

TEST_CASE("cyclotomic arithmetic") {
    Field F3(FieldMode::root_of_unity(3));
    Scalar z = F3.zeta();
    CHECK(z * z * z == Scalar(1));
    CHECK(z * z + z + Scalar(1) == Scalar(0));

    Field F4(FieldMode::root_of_unity(4));
    CHECK(F4.q_power(std::vector<std::int64_t>{6}) == Scalar(-1));
    CHECK_THROWS_AS(FieldMode::root_of_unity(1), Error);

    for (int m : {2, 3, 4, 5, 6, 7, 12}) {
        Field F(FieldMode::root_of_unity(m));
        for (std::int64_t e = -2 * m; e <= 2 * m; ++e) {
            CHECK(F.q_power(std::vector<std::int64_t>{m * e}) == Scalar(1));
            auto v = eval_root(F.q_power(std::vector<std::int64_t>{e}), m);
            auto w = std::polar(1.0, 2 * M_PI * static_cast<double>(e) / m);
            CHECK(std::abs(v - w) < 1e-9);
        }
        // zeta is primitive: no smaller positive power is 1.
        for (int k = 1; k < m; ++k) CHECK_FALSE(F.q_power(std::vector<std::int64_t>{k}) == Scalar(1));
    }
}

TEST_CASE("cyclotomic inverse and distributivity") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-3, 3), k(0, 11);
    for (int m : {5, 6, 12}) {
        Field F(FieldMode::root_of_unity(m));
        for (int it = 0; it < 30; ++it) {
            Scalar x, y;
            for (int t = 0; t < 3; ++t) {
                x += Scalar(c(rng)) * F.q_power(std::vector<std::int64_t>{k(rng)});
                y += Scalar(c(rng)) * F.q_power(std::vector<std::int64_t>{k(rng)});
            }
            if (!x.is_zero()) {
                CHECK(x * x.inverse() == Scalar(1));
                CHECK(std::abs(eval_root(x.inverse(), m) * eval_root(x, m) - 1.0) < 1e-9);
            }
            CHECK(std::abs(eval_root(x * y, m) - eval_root(x, m) * eval_root(y, m)) < 1e-9);
        }
    }
}

TEST_CASE("mixing field kinds is rejected") {
    Field G(FieldMode::generic(1));
    Field R(FieldMode::root_of_unity(3));
    CHECK_THROWS_AS(G.parameter(0) + R.zeta(), Error);
    // Rational constants mix with both.
    CHECK(Scalar(Rational(1, 2)) + R.zeta() - R.zeta() == Scalar(Rational(1, 2)));
}
