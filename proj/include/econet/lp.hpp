#pragma once

#include <string>
#include <utility>
#include <vector>

#include "econet/matrix.hpp"

namespace econet {

/// Standard equality form: minimize c'x subject to A x = b, x >= 0.
struct LPProblem {
    Vector c;
    Matrix A;
    Vector b;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
    LPStatus status;
    Vector x;           // primal point (empty unless optimal)
    Vector theta;       // dual multipliers for the equality rows
    double objective;   // c'x at the optimum
    long pivots;
    Vector pivot_trace;  // objective value after each phase-2 pivot
};

/// General-form instance accepted by to_standard_form:
/// minimize c'x s.t. A_ub x <= b_ub, A_eq x = b_eq, bounds[j] = (lo, hi).
/// Empty bounds default to [0, +inf); +-inf entries are allowed.
struct GeneralLP {
    Vector c;
    Matrix A_ub;
    Vector b_ub;
    Matrix A_eq;
    Vector b_eq;
    std::vector<std::pair<double, double>> bounds;
};

/// How each original variable reads off the standard-form vector z:
/// x_j = shift + sign * z[pos] - z[neg] (neg = -1 when unused).
struct VariableMap {
    int pos;
    int neg;
    double shift;
    double sign;
};

struct StandardForm {
    LPProblem problem;
    std::vector<VariableMap> vars;
    double objective_offset;  // constant dropped from the shifted objective
    // Row layout of problem.A: user inequality rows, then upper-bound rows,
    // then user equality rows.
    std::size_t ub_rows;
    std::size_t bound_rows;
    std::size_t eq_rows;
};

StandardForm to_standard_form(const GeneralLP& g);

/// Maps a standard-form point back to the original variables.
Vector recover_original(const StandardForm& sf, const Vector& z);

/// Two-phase dense simplex with Bland's anti-cycling rule.
LPSolution simplex_solve(const LPProblem& p);

/// Convenience: standardize, solve, and map the primal point back.
/// The returned dual covers the rows in order (A_ub rows, then A_eq rows).
LPSolution solve_general(const GeneralLP& g);

/// Dual of the standard-form problem: maximize b'theta s.t. A'theta <= c,
/// theta free — returned as a GeneralLP in minimization form (c_dual = -b).
GeneralLP dual_of(const LPProblem& p);

struct SlacknessReport {
    bool ok;
    std::string detail;  // names the first violated condition when !ok
};

/// Checks theta_i (b_i - A_i x) = 0 and x_j (c_j - (A'theta)_j) = 0 within
/// tol. Feasibility of x and theta is deliberately not checked here.
SlacknessReport check_complementary_slackness(const Vector& x, const Vector& theta,
                                              const LPProblem& p, double tol = 1e-8);

}  // namespace econet
