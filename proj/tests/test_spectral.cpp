#include <doctest.h>

#include <cmath>

#include "econet/rng.hpp"
#include "econet/spectral.hpp"
#include "fixtures.hpp"

using namespace econet;

TEST_CASE("spectral radius of known matrices") {
    // eigenvalues 3 and 1
    CHECK(spectral_radius(Matrix{{2, 1}, {1, 2}}) == doctest::Approx(3.0).epsilon(1e-9));
    // nilpotent
    CHECK(spectral_radius(Matrix{{0, 1}, {0, 0}}) == doctest::Approx(0.0));
    // rotation-like: eigenvalues +-i sqrt(2)
    CHECK(spectral_radius(Matrix{{0, 2}, {-1, 0}}) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    // stochastic matrices have radius 1
    CHECK(spectral_radius(fixtures::mobility_matrix()) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("row/column sum bounds bracket the radius") {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 6);
        Matrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = rng.uniform01();
        auto [lo, hi] = spectral_radius_bounds(a);
        const double r = spectral_radius(a);
        CHECK(r >= lo - 1e-8);
        CHECK(r <= hi + 1e-8);
    }
}

TEST_CASE("gelfand sequence is exact for constant column sums") {
    // column sums all 0.7, so ||A^k||_1^{1/k} = 0.7 for every k
    Matrix a{{0.3, 0.5}, {0.4, 0.2}};
    Vector seq = gelfand_estimate(a, MatrixNormKind::L1, 30);
    for (double v : seq) CHECK(v == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("gelfand sequence converges in other norms") {
    Matrix a{{0.2, 0.6, 0.0}, {0.1, 0.1, 0.3}, {0.4, 0.0, 0.2}};
    const double r = spectral_radius(a);
    Vector seq = gelfand_estimate(a, MatrixNormKind::Linf, 200);
    CHECK(seq.back() == doctest::Approx(r).epsilon(1e-2));
    CHECK(std::abs(seq[199] - r) < std::abs(seq[4] - r));
}

TEST_CASE("dominant eigenpair and perron projection") {
    Matrix a{{2, 1}, {1, 2}};  // r = 3, right = (.5, .5)
    DominantEigenpair pair = dominant_eigenpair(a);
    CHECK(pair.radius == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(pair.right[0] == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(dot(pair.left, pair.right) == doctest::Approx(1.0).epsilon(1e-10));

    // A^m / r^m converges to the projection at geometric rate |l2/l1| = 1/3
    Matrix proj = perron_projection(pair);
    Matrix p = Matrix::identity(2);
    for (int m = 1; m <= 12; ++m) {
        p = matmul(p, a);
        p *= 1.0 / 3.0;
    }
    const double err = max_abs_entry(p - proj);
    CHECK(err < 2.0 * std::pow(1.0 / 3.0, 12));
}

TEST_CASE("imprimitive matrix is reported") {
    // weighted 2-cycle: the l1-normalized iterates oscillate forever
    Matrix flip{{0, 2}, {1, 0}};
    CHECK_THROWS_AS(dominant_eigenpair(flip), NumericalError);
}

TEST_CASE("neumann inverse matches direct solve") {
    Matrix a{{0.2, 0.3}, {0.1, 0.4}};
    Matrix l = neumann_inverse(a);
    Matrix direct = inverse(Matrix::identity(2) - a);
    CHECK(max_abs_entry(l - direct) < 1e-9);

    // same answer on the branch that skips the series
    Matrix b{{0.05, 0.92}, {0.91, 0.05}};  // ||B||_inf close to 1 but r < 1
    CHECK(spectral_radius(b) < 1.0);
    Matrix l2 = neumann_inverse(b);
    Matrix d2 = inverse(Matrix::identity(2) - b);
    CHECK(max_abs_entry(l2 - d2) < 1e-9);

    CHECK_THROWS_AS(neumann_inverse(Matrix{{1.2, 0}, {0, 0.5}}), SpectralRadiusError);
}

TEST_CASE("solve_neumann solves x = Ax + b") {
    Matrix a{{0.3, 0.2, 0.0}, {0.0, 0.1, 0.25}, {0.15, 0.0, 0.3}};
    Vector b{1, 2, 3};
    Vector x = solve_neumann(a, b);
    Vector lhs = vadd(matvec(a, x), b);
    for (int i = 0; i < 3; ++i) CHECK(x[i] == doctest::Approx(lhs[i]).epsilon(1e-10));
}

TEST_CASE("local spectral radius approaches the true radius") {
    Matrix a{{0.4, 0.3}, {0.2, 0.5}};
    const double r = spectral_radius(a);
    // convergence in m is only O(1/m), so the tolerance is loose
    CHECK(local_spectral_radius(a, {1.0, 1.0}, 200) == doctest::Approx(r).epsilon(1e-2));
}
