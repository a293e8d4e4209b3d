#include <doctest.h>

#include <cmath>
#include <limits>

#include "econet/lp.hpp"
#include "econet/rng.hpp"
#include "fixtures.hpp"

using namespace econet;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("firm production plan") {
    GeneralLP g = fixtures::firm_lp();
    LPSolution sol = solve_general(g);
    REQUIRE(sol.status == LPStatus::Optimal);
    CHECK(sol.x[0] == doctest::Approx(2.5).epsilon(1e-9));
    CHECK(sol.x[1] == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(sol.objective == doctest::Approx(-27.5).epsilon(1e-9));
}

TEST_CASE("strong duality on the firm problem") {
    StandardForm sf = to_standard_form(fixtures::firm_lp());
    LPSolution primal = simplex_solve(sf.problem);
    REQUIRE(primal.status == LPStatus::Optimal);

    GeneralLP dual = dual_of(sf.problem);
    LPSolution dsol = solve_general(dual);
    REQUIRE(dsol.status == LPStatus::Optimal);
    // dual is returned in minimization form, so its value is -max b'theta
    CHECK(primal.objective == doctest::Approx(-dsol.objective).epsilon(1e-6));

    // the duals reported by the primal solve achieve the dual optimum
    CHECK(dot(primal.theta, sf.problem.b) == doctest::Approx(primal.objective).epsilon(1e-6));

    auto report = check_complementary_slackness(primal.x, primal.theta, sf.problem);
    CHECK(report.ok);
}

TEST_CASE("infeasible and unbounded detection") {
    // x1 + x2 = -1 with x >= 0 is infeasible
    LPProblem inf{{1, 1}, Matrix{{1, 1}}, {-1}};
    CHECK(simplex_solve(inf).status == LPStatus::Infeasible);

    // minimize -x1 with only x1 - x2 = 0: ray (t, t) drives the value down
    LPProblem unb{{-1, 0}, Matrix{{1, -1}}, {0}};
    CHECK(simplex_solve(unb).status == LPStatus::Unbounded);
}

TEST_CASE("negative right-hand sides are handled") {
    // x1 - x2 = -3, x1 + x2 = 5 -> x = (1, 4)
    LPProblem p{{1, 1}, Matrix{{1, -1}, {1, 1}}, {-3, 5}};
    LPSolution sol = simplex_solve(p);
    REQUIRE(sol.status == LPStatus::Optimal);
    CHECK(sol.x[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(sol.x[1] == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("general form with free and shifted variables") {
    // minimize x1 + x2 with x1 free, x2 in [2, 10], x1 + x2 >= 4
    // (written as -x1 - x2 <= -4). Optimum at x2 = 10? No: minimize, so
    // x2 = 2 and x1 = 2.
    GeneralLP g;
    g.c = {1, 1};
    g.A_ub = Matrix{{-1, -1}};
    g.b_ub = {-4};
    g.bounds = {{-kInf, kInf}, {2, 10}};
    LPSolution sol = solve_general(g);
    REQUIRE(sol.status == LPStatus::Optimal);
    CHECK(sol.x[0] + sol.x[1] == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(sol.objective == doctest::Approx(4.0).epsilon(1e-9));

    // flip the objective on the free variable: now unbounded below
    g.c = {-1, 0};
    g.A_ub = Matrix{{0, 1}};
    g.b_ub = {10};
    CHECK(solve_general(g).status == LPStatus::Unbounded);
}

TEST_CASE("upper-bounded-only variable is mirrored correctly") {
    // maximize x (minimize -x) with x <= 3 and no lower bound on paper,
    // but a floor from the constraint x >= -5
    GeneralLP g;
    g.c = {-1};
    g.bounds = {{-5, 3}};
    LPSolution sol = solve_general(g);
    REQUIRE(sol.status == LPStatus::Optimal);
    CHECK(sol.x[0] == doctest::Approx(3.0).epsilon(1e-9));

    GeneralLP h;
    h.c = {1};
    h.bounds = {{-kInf, 3}};
    LPSolution smin = solve_general(h);
    CHECK(smin.status == LPStatus::Unbounded);
}

TEST_CASE("equality constraints in general form") {
    // minimize 2x1 + x2 s.t. x1 + x2 = 3, x1 <= 2
    GeneralLP g;
    g.c = {2, 1};
    g.A_eq = Matrix{{1, 1}};
    g.b_eq = {3};
    g.A_ub = Matrix{{1, 0}};
    g.b_ub = {2};
    LPSolution sol = solve_general(g);
    REQUIRE(sol.status == LPStatus::Optimal);
    CHECK(std::abs(sol.x[0]) <= 1e-9);
    CHECK(sol.x[1] == doctest::Approx(3.0).epsilon(1e-9));
    // dual vector covers ub rows then eq rows
    CHECK(sol.theta.size() == 2);
}

TEST_CASE("randomized feasible instances satisfy optimality conditions") {
    Rng rng(555);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 2 + static_cast<int>(rng.next_u64() % 3);
        const int n = m + 1 + static_cast<int>(rng.next_u64() % 3);
        Matrix a(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = rng.uniform01() * 2 - 0.5;
        // choose a feasible interior point so the instance is feasible
        Vector x0(n);
        for (int j = 0; j < n; ++j) x0[j] = rng.uniform01() + 0.1;
        Vector b = matvec(a, x0);
        Vector c(n);
        for (int j = 0; j < n; ++j) c[j] = rng.uniform01() + 0.05;  // bounded below

        LPProblem p{c, a, b};
        LPSolution sol = simplex_solve(p);
        REQUIRE(sol.status == LPStatus::Optimal);

        // primal feasibility
        Vector ax = matvec(a, sol.x);
        for (int i = 0; i < m; ++i) CHECK(std::abs(ax[i] - b[i]) < 1e-7);
        for (int j = 0; j < n; ++j) CHECK(sol.x[j] >= -1e-9);

        // optimal value no worse than the seed point
        CHECK(sol.objective <= dot(c, x0) + 1e-7);

        // basic solutions have at most m positive coordinates
        int support = 0;
        for (int j = 0; j < n; ++j)
            if (sol.x[j] > 1e-7) ++support;
        CHECK(support <= m);

        auto report = check_complementary_slackness(sol.x, sol.theta, p, 1e-6);
        CHECK(report.ok);

        // phase-2 objective trace never increases
        for (std::size_t k = 1; k < sol.pivot_trace.size(); ++k)
            CHECK(sol.pivot_trace[k] <= sol.pivot_trace[k - 1] + 1e-9);
    }
}
