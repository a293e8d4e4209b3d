#include "econet/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace econet {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr long kMaxPivots = 200000;
const double kInf = std::numeric_limits<double>::infinity();

enum class CoreStatus { Optimal, Unbounded };

// Tableau rows 0..m-1 are constraints, row m is the reduced-cost row; the
// last column holds the rhs (and minus the objective in row m).
CoreStatus run_simplex(std::vector<Vector>& t, std::vector<int>& basis,
                       std::size_t ncols, const std::vector<bool>& allowed,
                       long& pivots, Vector* trace) {
    const std::size_t m = basis.size();
    for (;;) {
        // Bland: entering column = smallest eligible index.
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (allowed[j] && t[m][j] < -kPivotTol) {
                enter = j;
                break;
            }
        }
        if (enter == ncols) return CoreStatus::Optimal;

        std::size_t leave = m;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= kPivotTol) continue;
            const double ratio = t[i][ncols] / t[i][enter];
            if (leave == m || ratio < best_ratio - kPivotTol ||
                (std::abs(ratio - best_ratio) <= kPivotTol && basis[i] < basis[leave]))
            {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) return CoreStatus::Unbounded;

        const double piv = t[leave][enter];
        for (std::size_t j = 0; j <= ncols; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double f = t[i][enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = static_cast<int>(enter);
        if (++pivots > kMaxPivots)
            throw NumericalError("simplex_solve: pivot budget exceeded", pivots);
        if (trace) trace->push_back(-t[m][ncols]);
    }
}

}  // namespace

LPSolution simplex_solve(const LPProblem& p) {
    const std::size_t m = p.A.rows();
    const std::size_t n = p.A.cols();
    if (p.c.size() != n || p.b.size() != m)
        throw InvalidArgument("simplex_solve: dimension mismatch");

    // Flip rows with negative rhs so phase 1 can start from the artificials.
    Matrix a = p.A;
    Vector b = p.b;
    std::vector<bool> flipped(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0.0) {
            flipped[i] = true;
            b[i] = -b[i];
            for (std::size_t j = 0; j < n; ++j) a(i, j) = -a(i, j);
        }
    }

    const std::size_t ncols = n + m;  // structurals + artificials
    std::vector<Vector> t(m + 1, Vector(ncols + 1, 0.0));
    std::vector<int> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a(i, j);
        t[i][n + i] = 1.0;
        t[i][ncols] = b[i];
        basis[i] = static_cast<int>(n + i);
    }
    // Phase-1 reduced costs: minimize the artificial sum.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) t[m][j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) t[m][ncols] -= t[i][ncols];

    std::vector<bool> allowed(ncols, true);
    long pivots = 0;
    run_simplex(t, basis, ncols, allowed, pivots, nullptr);

    LPSolution sol;
    sol.pivots = pivots;
    sol.objective = 0.0;
    if (-t[m][ncols] > 1e-7) {
        sol.status = LPStatus::Infeasible;
        return sol;
    }

    // Drive remaining artificials out of the basis where a structural pivot
    // exists; rows with none are redundant and keep a zero-valued artificial.
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < static_cast<int>(n)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(t[i][j]) > kPivotTol) {
                const double piv = t[i][j];
                for (std::size_t k = 0; k <= ncols; ++k) t[i][k] /= piv;
                for (std::size_t r = 0; r <= m; ++r) {
                    if (r == i) continue;
                    const double f = t[r][j];
                    if (f == 0.0) continue;
                    for (std::size_t k = 0; k <= ncols; ++k) t[r][k] -= f * t[i][k];
                }
                basis[i] = static_cast<int>(j);
                break;
            }
        }
    }
    for (std::size_t j = n; j < ncols; ++j) allowed[j] = false;

    // Phase 2: rebuild the reduced-cost row from the real objective.
    for (std::size_t j = 0; j <= ncols; ++j) t[m][j] = 0.0;
    for (std::size_t j = 0; j < n; ++j) t[m][j] = p.c[j];
    for (std::size_t i = 0; i < m; ++i) {
        const int bi = basis[i];
        const double cb = (bi < static_cast<int>(n)) ? p.c[bi] : 0.0;
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j <= ncols; ++j) t[m][j] -= cb * t[i][j];
    }

    sol.pivot_trace.push_back(-t[m][ncols]);
    if (run_simplex(t, basis, ncols, allowed, pivots, &sol.pivot_trace) ==
        CoreStatus::Unbounded)
    {
        sol.status = LPStatus::Unbounded;
        sol.pivots = pivots;
        return sol;
    }
    sol.pivots = pivots;

    sol.x = Vector(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < static_cast<int>(n)) sol.x[basis[i]] = t[i][ncols];
    sol.objective = dot(p.c, sol.x);

    // Dual from the optimal basis: solve B' theta = c_B using the columns of
    // the (sign-adjusted) constraint matrix; artificial columns are units.
    Matrix bt(m, m);
    Vector cb(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const int bi = basis[i];
        if (bi < static_cast<int>(n)) {
            for (std::size_t r = 0; r < m; ++r) bt(i, r) = a(r, bi);
            cb[i] = p.c[bi];
        } else {
            bt(i, bi - static_cast<int>(n)) = 1.0;
        }
    }
    sol.theta = solve(bt, cb);
    for (std::size_t i = 0; i < m; ++i)
        if (flipped[i]) sol.theta[i] = -sol.theta[i];

    sol.status = LPStatus::Optimal;
    return sol;
}

StandardForm to_standard_form(const GeneralLP& g) {
    const std::size_t n = g.c.size();
    const std::size_t mu = g.b_ub.size();
    const std::size_t me = g.b_eq.size();
    if ((mu > 0 && (g.A_ub.rows() != mu || g.A_ub.cols() != n)) ||
        (mu == 0 && g.A_ub.rows() != 0))
        throw InvalidArgument("to_standard_form: A_ub/b_ub dimension mismatch");
    if ((me > 0 && (g.A_eq.rows() != me || g.A_eq.cols() != n)) ||
        (me == 0 && g.A_eq.rows() != 0))
        throw InvalidArgument("to_standard_form: A_eq/b_eq dimension mismatch");
    if (!g.bounds.empty() && g.bounds.size() != n)
        throw InvalidArgument("to_standard_form: bounds length mismatch");

    StandardForm sf;
    sf.objective_offset = 0.0;
    sf.vars.resize(n);
    std::vector<double> bound_row_rhs;  // z_pos <= hi - lo rows
    std::vector<int> bound_row_var;
    std::size_t next_extra = n;  // split-variable columns appended after pos
    for (std::size_t j = 0; j < n; ++j) {
        double lo = 0.0, hi = kInf;
        if (!g.bounds.empty()) {
            lo = g.bounds[j].first;
            hi = g.bounds[j].second;
        }
        if (lo > hi) throw InvalidArgument("to_standard_form: empty bound interval");
        VariableMap& v = sf.vars[j];
        v.pos = static_cast<int>(j);
        v.neg = -1;
        if (lo == -kInf && hi == kInf) {
            v.shift = 0.0;
            v.sign = 1.0;
            v.neg = static_cast<int>(next_extra++);
        } else if (lo == -kInf) {
            v.shift = hi;  // x = hi - z
            v.sign = -1.0;
        } else {
            v.shift = lo;  // x = lo + z
            v.sign = 1.0;
            if (hi < kInf) {
                bound_row_var.push_back(static_cast<int>(j));
                bound_row_rhs.push_back(hi - lo);
            }
        }
    }
    const std::size_t nneg = next_extra - n;
    const std::size_t nbound = bound_row_rhs.size();
    const std::size_t rows = mu + nbound + me;
    const std::size_t cols = n + nneg + mu + nbound;  // slacks for ub + bound rows

    LPProblem p;
    p.A = Matrix(rows, cols);
    p.b = Vector(rows, 0.0);
    p.c = Vector(cols, 0.0);

    for (std::size_t j = 0; j < n; ++j) {
        const VariableMap& v = sf.vars[j];
        p.c[v.pos] = g.c[j] * v.sign;
        if (v.neg >= 0) p.c[v.neg] = -g.c[j];
        sf.objective_offset += g.c[j] * v.shift;
    }

    auto fill_row = [&](std::size_t row, const Matrix& src, std::size_t src_row,
                        double rhs) {
        double shift_total = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double aij = src(src_row, j);
            if (aij == 0.0) continue;
            const VariableMap& v = sf.vars[j];
            p.A(row, v.pos) += aij * v.sign;
            if (v.neg >= 0) p.A(row, v.neg) -= aij;
            shift_total += aij * v.shift;
        }
        p.b[row] = rhs - shift_total;
    };

    for (std::size_t i = 0; i < mu; ++i) {
        fill_row(i, g.A_ub, i, g.b_ub[i]);
        p.A(i, n + nneg + i) = 1.0;  // slack
    }
    for (std::size_t i = 0; i < nbound; ++i) {
        const std::size_t row = mu + i;
        p.A(row, bound_row_var[i]) = 1.0;
        p.A(row, n + nneg + mu + i) = 1.0;  // slack
        p.b[row] = bound_row_rhs[i];
    }
    for (std::size_t i = 0; i < me; ++i) fill_row(mu + nbound + i, g.A_eq, i, g.b_eq[i]);

    sf.problem = std::move(p);
    sf.ub_rows = mu;
    sf.bound_rows = nbound;
    sf.eq_rows = me;
    return sf;
}

Vector recover_original(const StandardForm& sf, const Vector& z) {
    Vector x(sf.vars.size());
    for (std::size_t j = 0; j < sf.vars.size(); ++j) {
        const VariableMap& v = sf.vars[j];
        x[j] = v.shift + v.sign * z[v.pos];
        if (v.neg >= 0) x[j] -= z[v.neg];
    }
    return x;
}

LPSolution solve_general(const GeneralLP& g) {
    const StandardForm sf = to_standard_form(g);
    LPSolution sol = simplex_solve(sf.problem);
    if (sol.status != LPStatus::Optimal) return sol;
    sol.x = recover_original(sf, sol.x);
    sol.objective += sf.objective_offset;
    // Report duals for the user's rows only: inequality rows then equalities.
    Vector theta;
    theta.reserve(sf.ub_rows + sf.eq_rows);
    for (std::size_t i = 0; i < sf.ub_rows; ++i) theta.push_back(sol.theta[i]);
    for (std::size_t i = 0; i < sf.eq_rows; ++i)
        theta.push_back(sol.theta[sf.ub_rows + sf.bound_rows + i]);
    sol.theta = std::move(theta);
    return sol;
}

GeneralLP dual_of(const LPProblem& p) {
    GeneralLP d;
    d.c = vscale(p.b, -1.0);  // max b'theta == min -b'theta
    d.A_ub = p.A.transpose();
    d.b_ub = p.c;
    d.bounds.assign(p.b.size(), {-kInf, kInf});
    return d;
}

SlacknessReport check_complementary_slackness(const Vector& x, const Vector& theta,
                                              const LPProblem& p, double tol) {
    if (x.size() != p.A.cols() || theta.size() != p.A.rows())
        throw InvalidArgument("check_complementary_slackness: dimension mismatch");
    for (std::size_t i = 0; i < p.A.rows(); ++i) {
        double ax = 0.0;
        for (std::size_t j = 0; j < p.A.cols(); ++j) ax += p.A(i, j) * x[j];
        const double v = theta[i] * (p.b[i] - ax);
        if (std::abs(v) > tol)
            return {false, "theta[" + std::to_string(i) + "] * (b - Ax)[" +
                               std::to_string(i) + "] = " + std::to_string(v)};
    }
    for (std::size_t j = 0; j < p.A.cols(); ++j) {
        double at = 0.0;
        for (std::size_t i = 0; i < p.A.rows(); ++i) at += p.A(i, j) * theta[i];
        const double v = x[j] * (p.c[j] - at);
        if (std::abs(v) > tol)
            return {false, "x[" + std::to_string(j) + "] * (c - A'theta)[" +
                               std::to_string(j) + "] = " + std::to_string(v)};
    }
    return {true, ""};
}

}  // namespace econet
