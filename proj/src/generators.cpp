#include "qtorus/generators.hpp"

#include <numeric>

#include "qtorus/error.hpp"
#include "qtorus/skew.hpp"

namespace qtorus {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Exponent random_base_exponent(const AlgebraPtr& ctx, std::mt19937_64& rng) {
    Exponent b(static_cast<std::size_t>(ctx->n()), 0);
    for (int j = 0; j + 1 < ctx->n(); ++j) b[static_cast<std::size_t>(j)] = uniform(rng, -1, 1);
    return b;
}

Element random_base_monomial(const AlgebraPtr& ctx, std::mt19937_64& rng) {
    return Element::monomial(ctx, random_base_exponent(ctx, rng), random_small_scalar(ctx->field(), rng));
}

Element random_base_element(const AlgebraPtr& ctx, std::mt19937_64& rng) {
    Element out(ctx);
    const auto terms = uniform(rng, 0, 2);
    for (std::int64_t k = 0; k < terms; ++k) out += random_base_monomial(ctx, rng);
    return out;
}

}  // namespace

Scalar random_small_scalar(const Field& F, std::mt19937_64& rng) {
    static const int nums[] = {1, -1, 2, -2, 3, -3, 1, -1};
    static const int dens[] = {1, 1, 1, 1, 1, 2, 2, 3};
    const auto i = static_cast<std::size_t>(uniform(rng, 0, 7));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, 7));
    Scalar s(Rational(nums[i], dens[j]));
    const auto& mode = F.mode();
    IntVec e(static_cast<std::size_t>(mode.r), 0);
    for (auto& x : e) x = mode.is_root() ? uniform(rng, 0, mode.m - 1) : uniform(rng, -1, 1);
    return s * F.q_power(e);
}

Element random_unitary(const AlgebraPtr& ctx, int degree, std::mt19937_64& rng) {
    if (degree < 1) throw Error(ErrorKind::DimensionMismatch, "unitary degree must be at least 1");
    Element f = random_base_monomial(ctx, rng);
    for (int i = 1; i < degree; ++i) f += t_power(ctx, i) * random_base_element(ctx, rng);
    f += t_power(ctx, degree) * random_base_monomial(ctx, rng);
    return f;
}

Element random_irreducible_candidate(const AlgebraPtr& ctx, int degree, std::mt19937_64& rng) {
    if (ctx->n() != 2) throw Error(ErrorKind::UnsupportedRank, "irreducible candidates need n = 2");
    if (degree < 1) throw Error(ErrorKind::DimensionMismatch, "unitary degree must be at least 1");
    std::int64_t k = 1;
    do {
        k = uniform(rng, 1, degree + 2);
    } while (std::gcd(k, static_cast<std::int64_t>(degree)) != 1);
    const auto x = [&](std::int64_t e, const Scalar& c) { return Element::monomial(ctx, Exponent{e, 0}, c); };
    Element f = t_power(ctx, degree);
    for (int i = 1; i < degree; ++i) {
        // Valuation strictly above the segment from (0, k) to (d, 0).
        const std::int64_t floor_v = k * (degree - i) / degree;
        Element c(ctx);
        for (std::int64_t e = floor_v + 1; e <= floor_v + 2; ++e)
            if (uniform(rng, 0, 1)) c += x(e, random_small_scalar(ctx->field(), rng));
        f += t_power(ctx, i) * c;
    }
    f += x(k, random_small_scalar(ctx->field(), rng));
    return f;
}

Element random_reducible(const AlgebraPtr& ctx, int degree, std::mt19937_64& rng) {
    if (degree < 2) throw Error(ErrorKind::DimensionMismatch, "reducible elements need degree at least 2");
    const Element g = random_unitary(ctx, degree - 1, rng);
    const Element linear = t_power(ctx, 1) - random_base_monomial(ctx, rng);
    return g * linear;
}

}  // namespace qtorus
