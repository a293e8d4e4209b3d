#include <doctest.h>

#include <cmath>

#include "econet/fixedpoint.hpp"
#include "econet/spectral.hpp"

using namespace econet;

TEST_CASE("picard iteration on a linear contraction") {
    Matrix a{{0.3, 0.1}, {0.2, 0.4}};
    Vector b{1.0, 2.0};
    VectorMap f = [&](const Vector& x) { return vadd(matvec(a, x), b); };
    IterationResult res = iterate(f, {0.0, 0.0}, ResidualNorm::Linf, 1e-12);
    Vector exact = solve_neumann(a, b);
    CHECK(res.point[0] == doctest::Approx(exact[0]).epsilon(1e-10));
    CHECK(res.point[1] == doctest::Approx(exact[1]).epsilon(1e-10));
    CHECK(res.residual <= 1e-12);
}

TEST_CASE("picard iteration reports non-convergence") {
    VectorMap flip = [](const Vector& x) { return Vector{x[1], x[0]}; };
    CHECK_THROWS_AS(iterate(flip, {0.0, 1.0}, ResidualNorm::Linf, 1e-12, 50),
                    NonConvergence);
}

TEST_CASE("monotone iteration brackets the fixed point set") {
    // concave increasing map on [0, 4]: F(x) = sqrt(x) + 1, fixed point near 2.618
    VectorMap f = [](const Vector& x) { return Vector{std::sqrt(x[0]) + 1.0}; };
    IterationResult lo = monotone_iterate(f, {0.0}, MonotoneDirection::Below, 1e-12);
    IterationResult hi = monotone_iterate(f, {4.0}, MonotoneDirection::Above, 1e-12);
    const double star = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(lo.point[0] == doctest::Approx(star).epsilon(1e-6));
    CHECK(hi.point[0] == doctest::Approx(star).epsilon(1e-6));
    CHECK(lo.certificate == FPCertificate::MonotoneBelow);
    CHECK(hi.certificate == FPCertificate::MonotoneAbove);
}

TEST_CASE("monotone iteration rejects a non-monotone start") {
    // starting above the fixed point while claiming to approach from below
    VectorMap f = [](const Vector& x) { return Vector{0.5 * x[0]}; };
    CHECK_THROWS_AS(monotone_iterate(f, {1.0}, MonotoneDirection::Below), ContractViolation);
    CHECK_NOTHROW(monotone_iterate(f, {1.0}, MonotoneDirection::Above));
}

TEST_CASE("eventual contraction certificate") {
    auto [ok, r] = eventual_contraction_certificate(Matrix{{0.5, 0.4}, {0.3, 0.2}});
    CHECK(ok);
    CHECK(r < 1.0);
    auto [bad, r2] = eventual_contraction_certificate(Matrix{{0.9, 0.4}, {0.5, 0.8}});
    CHECK_FALSE(bad);
    CHECK(r2 > 1.0);
    CHECK_THROWS_AS(eventual_contraction_certificate(Matrix{{-0.1}}), InvalidArgument);
}

TEST_CASE("concavity certificate accepts a concave map and rejects a convex one") {
    VectorMap concave = [](const Vector& x) {
        return Vector{std::sqrt(x[0] + 0.5), std::sqrt(x[1] + 0.5)};
    };
    CHECK(du_certificate(concave, {0.0, 0.0}, {4.0, 4.0}));

    VectorMap convex = [](const Vector& x) {
        return Vector{x[0] * x[0] + 0.5, x[1] * x[1] + 0.5};
    };
    CHECK_FALSE(du_certificate(convex, {0.0, 0.0}, {4.0, 4.0}));
}
