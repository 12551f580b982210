#include <doctest.h>

#include <random>

#include "qtorus/error.hpp"
#include "qtorus/lattice.hpp"

using namespace qtorus;

namespace {

ExponentSystem sys1(const IntMatrix& E, FieldMode mode = FieldMode::generic(1)) {
    return ExponentSystem{static_cast<int>(E.rows()), mode, {E}};
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

IntMatrix random_antisym(std::mt19937_64& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = d(rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

// Independent oracle: enumerate the box and keep vectors pairing trivially
// with every basis vector.
std::vector<IntVec> radical_in_box(const ExponentSystem& sys, int bound) {
    std::vector<IntVec> out;
    const auto n = static_cast<std::size_t>(sys.n);
    IntVec v(n, -bound);
    for (;;) {
        bool central = true;
        for (std::size_t j = 0; j < n && central; ++j) {
            IntVec e(n, 0);
            e[j] = 1;
            central = pairing_trivial(pairing(v, e, sys), sys);
        }
        if (central) out.push_back(v);
        std::size_t i = 0;
        while (i < n && v[i] == bound) v[i++] = -bound;
        if (i == n) break;
        ++v[i];
    }
    return out;
}

}  // namespace

TEST_CASE("validate") {
    CHECK_NOTHROW(validate(sys1({{0, 1}, {-1, 0}})));
    auto v = find_violation(sys1({{1, 0}, {0, 0}}));
    REQUIRE(v);
    CHECK(v->describe() == "(1,1,1)");
    v = find_violation(sys1({{0, 1}, {1, 0}}));
    REQUIRE(v);
    CHECK(v->describe() == "(1,2,1)");
    CHECK_THROWS_AS(validate(sys1({{0, 1}, {1, 0}})), Error);
}

TEST_CASE("pairing") {
    auto s = sys1({{0, 1}, {-1, 0}});
    CHECK(pairing({1, 0}, {0, 1}, s) == IntVec{1});
    CHECK(pairing({3, -2}, {3, -2}, s) == IntVec{0});
    auto s3 = sys1({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
    // a^T E b = a1 b2 - a2 b1 = 1*1 - 1*0
    CHECK(pairing({1, 1, 0}, {0, 1, 1}, s3) == IntVec{1});
    CHECK_THROWS_AS(pairing({1}, {0, 1}, s), Error);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int it = 0; it < 200; ++it) {
        ExponentSystem sys{4, FieldMode::generic(2), {random_antisym(rng, 4, 3), random_antisym(rng, 4, 3)}};
        IntVec a(4), a2(4), b(4), sum(4);
        for (int i = 0; i < 4; ++i) a[i] = d(rng), a2[i] = d(rng), b[i] = d(rng), sum[i] = a[i] + a2[i];
        IntVec pab = pairing(a, b, sys), pba = pairing(b, a, sys), pa2b = pairing(a2, b, sys);
        for (int k = 0; k < 2; ++k) {
            CHECK(pab[k] == -pba[k]);
            CHECK(pairing(sum, b, sys)[k] == pab[k] + pa2b[k]);
        }
    }
}

TEST_CASE("smith normal form") {
    auto s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.D == IntMatrix::identity(3));
    s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.invariant_factors() == IntVec{1, 6});
    s = smith_normal_form(IntMatrix{{0}});
    CHECK(s.D == IntMatrix{{0}});

    std::mt19937_64 rng(13);
    for (int it = 0; it < 300; ++it) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix M = random_matrix(rng, r, c, -6, 6);
        auto f = smith_normal_form(M);
        CHECK(f.U * M * f.V == f.D);
        CHECK(std::llabs(determinant(f.U)) == 1);
        CHECK(std::llabs(determinant(f.V)) == 1);
        auto d = f.invariant_factors();
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(d[i] >= 0);
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t k = 0; k < c; ++k)
                    if (j != k || j != i) {
                        if (j != k) CHECK(f.D(j, k) == 0);
                    }
            if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
            if (d[i] == 0 && i + 1 < d.size()) CHECK(d[i + 1] == 0);
        }
        CHECK(f.rank() == rank(M));
    }
}

TEST_CASE("integer span membership") {
    CHECK(in_integer_span({{1, 2}}, {2, 4}));
    CHECK_FALSE(in_integer_span({{2, 4}}, {1, 2}));
    CHECK_FALSE(in_integer_span({{1, 0}}, {0, 1}));
    CHECK(in_integer_span({{2, 1}, {1, 1}}, {0, 1}));
    CHECK(in_integer_span({}, {0, 0}));
}

TEST_CASE("center lattice") {
    CHECK(center_lattice(sys1({{0, 1}, {-1, 0}})).rank == 0);
    auto c = center_lattice(sys1({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}));
    CHECK(c.rank == 1);
    CHECK(c.basis == std::vector<IntVec>{{0, 0, 1}});
    c = center_lattice(sys1({{0, 1}, {-1, 0}}, FieldMode::root_of_unity(3)));
    CHECK(c.rank == 2);
    CHECK(c.basis == std::vector<IntVec>{{3, 0}, {0, 3}});

    // Box oracle: every radical vector in a box lies in the lattice and vice versa.
    std::mt19937_64 rng(17);
    for (int it = 0; it < 60; ++it) {
        std::size_t n = 2 + rng() % 2;
        FieldMode mode = (it % 2) ? FieldMode::root_of_unity(2 + static_cast<int>(rng() % 5)) : FieldMode::generic(1);
        auto sys = sys1(random_antisym(rng, n, 2), mode);
        auto lat = center_lattice(sys);
        for (const auto& b : lat.basis)
            for (std::size_t j = 0; j < n; ++j) {
                IntVec e(n, 0);
                e[j] = 1;
                CHECK(pairing_trivial(pairing(b, e, sys), sys));
            }
        for (const auto& v : radical_in_box(sys, 6)) CHECK(in_integer_span(lat.basis, v));
        if (!mode.is_root()) CHECK(lat.saturated);
    }
}

TEST_CASE("commutative sublattices") {
    auto g = sys1({{0, 1}, {-1, 0}});
    CHECK(is_commutative_sublattice(span_lattice({{3, 5}}, 2), g));
    CHECK_FALSE(is_commutative_sublattice(span_lattice({{1, 0}, {0, 1}}, 2), g));
    auto r = sys1({{0, 1}, {-1, 0}}, FieldMode::root_of_unity(3));
    CHECK(is_commutative_sublattice(span_lattice({{3, 0}, {0, 1}}, 2), r));
}

TEST_CASE("algebra dimension examples") {
    auto d = algebra_dimension(sys1({{0, 1}, {-1, 0}}));
    CHECK(d.exact);
    CHECK(d.value() == 1);
    d = algebra_dimension(sys1({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}));
    CHECK(d.value() == 2);
    d = algebra_dimension(sys1({{0, 1}, {-1, 0}}, FieldMode::root_of_unity(3)));
    CHECK(d.value() == 2);

    // Two parameters: E1 = e13, E2 = e23 gives dimension 2 (B = <e1, e2>).
    ExponentSystem two{3,
                       FieldMode::generic(2),
                       {IntMatrix{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}, IntMatrix{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}}};
    d = algebra_dimension(two);
    CHECK(d.exact);
    CHECK(d.value() == 2);
}

TEST_CASE("brute force oracle examples") {
    CHECK(brute_force_max_isotropic(sys1(IntMatrix(3, 3)), 1).rank == 3);
    CHECK(brute_force_max_isotropic(sys1({{0, 1}, {-1, 0}}), 3).rank == 1);
    auto r = brute_force_max_isotropic(sys1({{0, 1}, {-1, 0}}, FieldMode::root_of_unity(3)), 3);
    CHECK(r.rank == 2);
    CHECK(is_commutative_set(r.basis, sys1({{0, 1}, {-1, 0}}, FieldMode::root_of_unity(3))));
    CHECK_THROWS_AS(brute_force_max_isotropic(sys1(IntMatrix(4, 4)), 20), Error);
}

TEST_CASE("coordinate family") {
    CHECK(coordinate_family(1).size() == 2);
    auto f2 = coordinate_family(2);
    REQUIRE(f2.size() == 4);
    CHECK(f2[0].rank == 2);
    CHECK(f2[1].rank == 1);
    CHECK(f2[2].rank == 1);
    CHECK(f2[3].rank == 0);
    auto f3 = coordinate_family(3);
    std::vector<std::size_t> ranks;
    for (auto& s : f3) ranks.push_back(s.rank);
    CHECK(ranks == std::vector<std::size_t>{3, 2, 2, 2, 1, 1, 1, 0});
}

TEST_CASE("split change of basis") {
    auto sys = sys1({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
    auto split = make_split(IntMatrix::identity(3), 1);  // t = e2
    auto s2 = apply_split(sys, split);
    // New coordinates (e1, e3, e2): pairing of new e1 with new t is E12 = 1.
    CHECK(s2.E[0] == IntMatrix{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}});
    CHECK_THROWS_AS(make_split(IntMatrix{{2, 0}, {0, 1}}, 1), Error);
}
