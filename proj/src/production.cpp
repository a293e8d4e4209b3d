#include "econet/production.hpp"

#include <cmath>
#include <string>

#include "econet/spectral.hpp"

namespace econet {

void IOTable::validate(double rel_tol) const {
    if (!Z.square()) throw InvalidArgument("IOTable: Z must be square");
    const std::size_t n = Z.rows();
    if (x.size() != n) throw InvalidArgument("IOTable: x length mismatch");
    if (!d.empty() && d.size() != n) throw InvalidArgument("IOTable: d length mismatch");
    if (!Z.nonnegative()) throw InvalidArgument("IOTable: negative entry in Z");
    for (std::size_t j = 0; j < n; ++j) {
        if (x[j] < 0.0) throw InvalidArgument("IOTable: negative total sales");
        if (!d.empty() && d[j] < 0.0) throw InvalidArgument("IOTable: negative final demand");
    }
    if (!d.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            const double rhs = row_sum(Z, i) + d[i];
            const double scale = std::max(1.0, std::abs(x[i]));
            if (std::abs(x[i] - rhs) > rel_tol * scale)
                throw InvalidArgument("IOTable: accounting identity fails for sector " +
                                      std::to_string(i) + ": x = " + std::to_string(x[i]) +
                                      " vs Z1 + d = " + std::to_string(rhs));
        }
    }
}

IOTable IOTable::compacted(std::vector<int>& kept) const {
    const std::size_t n = Z.rows();
    kept.clear();
    for (std::size_t j = 0; j < n; ++j) {
        const bool empty = x[j] == 0.0 && row_sum(Z, j) == 0.0 && col_sum(Z, j) == 0.0 &&
                           (d.empty() || d[j] == 0.0);
        if (!empty) kept.push_back(static_cast<int>(j));
    }
    const std::size_t m = kept.size();
    IOTable out;
    out.Z = Matrix(m, m);
    out.x = Vector(m);
    if (!d.empty()) out.d = Vector(m);
    for (std::size_t i = 0; i < m; ++i) {
        out.x[i] = x[kept[i]];
        if (!d.empty()) out.d[i] = d[kept[i]];
        for (std::size_t j = 0; j < m; ++j) out.Z(i, j) = Z(kept[i], kept[j]);
    }
    return out;
}

IOCoefficients io_coefficients(const IOTable& t) {
    t.validate();
    const std::size_t n = t.Z.rows();
    IOCoefficients c{Matrix(n, n), Vector(n, 0.0)};
    for (std::size_t j = 0; j < n; ++j) {
        if (t.x[j] == 0.0) {
            if (col_sum(t.Z, j) > 0.0)
                throw DivisionByZero("io_coefficients: sector " + std::to_string(j) +
                                         " has zero sales but positive input purchases",
                                     static_cast<int>(j));
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            c.A(i, j) = t.Z(i, j) / t.x[j];
            c.eta[j] += c.A(i, j);
        }
    }
    return c;
}

Matrix ghosh_matrix(const IOTable& t) {
    t.validate();
    const std::size_t n = t.Z.rows();
    Matrix f(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (t.x[i] == 0.0) {
            if (row_sum(t.Z, i) > 0.0)
                throw DivisionByZero("ghosh_matrix: sector " + std::to_string(i) +
                                         " has zero sales but positive shipments",
                                     static_cast<int>(i));
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) f(i, j) = t.Z(i, j) / t.x[i];
    }
    return f;
}

namespace {

void require_radius_below_one(const Matrix& a, const char* who) {
    const double r = spectral_radius(a);
    if (r >= 1.0 - 1e-12)
        throw SpectralRadiusError(std::string(who) + ": spectral radius " +
                                      std::to_string(r) + " is not below 1",
                                  r);
}

}  // namespace

Matrix leontief_inverse(const Matrix& a) {
    if (!a.square()) throw InvalidArgument("leontief_inverse: matrix not square");
    if (!a.nonnegative()) throw InvalidArgument("leontief_inverse: negative entry");
    require_radius_below_one(a, "leontief_inverse");
    Matrix m = Matrix::identity(a.rows());
    m -= a;
    return inverse(m);
}

Vector equilibrium_output(const Matrix& a, const Vector& d) {
    if (d.size() != a.rows()) throw InvalidArgument("equilibrium_output: size mismatch");
    for (double v : d)
        if (v < 0.0) throw InvalidArgument("equilibrium_output: negative demand");
    if (!a.nonnegative()) throw InvalidArgument("equilibrium_output: negative entry");
    require_radius_below_one(a, "equilibrium_output");
    return solve_neumann(a, d);
}

std::vector<Vector> shock_rounds(const Matrix& a, const Vector& dd, int k) {
    if (dd.size() != a.rows()) throw InvalidArgument("shock_rounds: size mismatch");
    if (k < 0) throw InvalidArgument("shock_rounds: k must be >= 0");
    std::vector<Vector> rounds;
    rounds.reserve(k + 1);
    rounds.push_back(dd);
    for (int m = 1; m <= k; ++m) rounds.push_back(matvec(a, rounds.back()));
    return rounds;
}

Vector output_multipliers(const Matrix& a) {
    if (!a.nonnegative()) throw InvalidArgument("output_multipliers: negative entry");
    require_radius_below_one(a, "output_multipliers");
    // mu^T = 1^T (I - A)^{-1}, i.e. mu = (I - A^T)^{-1} 1.
    return solve_neumann(a.transpose(), Vector(a.rows(), 1.0));
}

Vector upstreamness(const Matrix& f) {
    if (!f.nonnegative()) throw InvalidArgument("upstreamness: negative entry");
    require_radius_below_one(f, "upstreamness");
    return solve_neumann(f, Vector(f.rows(), 1.0));
}

Vector domar_weights(const Matrix& a) {
    if (!a.nonnegative()) throw InvalidArgument("domar_weights: negative entry");
    require_radius_below_one(a, "domar_weights");
    const double n = static_cast<double>(a.rows());
    return solve_neumann(a, Vector(a.rows(), 1.0 / n));
}

double aggregate_volatility(const Vector& h, double sigma) {
    if (sigma < 0.0) throw InvalidArgument("aggregate_volatility: sigma must be >= 0");
    return sigma * norm_l2(h);
}

ConstrainedEquilibrium constrained_equilibrium(const Matrix& a, const Vector& d,
                                               const Vector& xbar, double tol) {
    const std::size_t n = a.rows();
    if (d.size() != n || xbar.size() != n)
        throw InvalidArgument("constrained_equilibrium: size mismatch");
    if (!a.nonnegative()) throw InvalidArgument("constrained_equilibrium: negative entry");
    for (std::size_t i = 0; i < n; ++i)
        if (d[i] < 0.0 || xbar[i] < 0.0)
            throw InvalidArgument("constrained_equilibrium: d and xbar must be >= 0");

    std::string cert = "none";
    if (spectral_radius(a) < 1.0 - 1e-12) {
        cert = "spectral-radius";
    } else {
        bool strict = true;
        for (std::size_t i = 0; i < n; ++i)
            if (d[i] <= 0.0 || xbar[i] <= 0.0) strict = false;
        if (strict) cert = "du";
    }

    Vector x(n, 0.0);
    const long max_iter = 1000000;
    for (long it = 1; it <= max_iter; ++it) {
        Vector next = matvec(a, x);
        for (std::size_t i = 0; i < n; ++i) next[i] = std::min(next[i] + d[i], xbar[i]);
        const double gap = norm_linf(vsub(next, x));
        x = std::move(next);
        if (gap <= tol) return {std::move(x), it, cert != "none", cert};
    }
    throw NonConvergence("constrained_equilibrium: no fixed point within iteration budget",
                         max_iter);
}

Vector quadratic_game_nash(const Matrix& a, double alpha, const Vector& eps) {
    if (eps.size() != a.rows()) throw InvalidArgument("quadratic_game_nash: size mismatch");
    if (!(alpha > 0.0)) throw InvalidArgument("quadratic_game_nash: alpha must be positive");
    const double r = spectral_radius(a);
    if (r >= 1.0 / alpha - 1e-12)
        throw SpectralRadiusError("quadratic_game_nash: r(A) = " + std::to_string(r) +
                                      " is not below 1/alpha = " + std::to_string(1.0 / alpha),
                                  r);
    return solve_neumann(a * alpha, eps);
}

double crs_spectral_check(const Matrix& a) {
    if (!a.square() || a.rows() == 0)
        throw InvalidArgument("crs_spectral_check: need a nonempty square matrix");
    if (!a.nonnegative()) throw InvalidArgument("crs_spectral_check: negative entry");
    const double s0 = col_sum(a, 0);
    for (std::size_t j = 1; j < a.cols(); ++j)
        if (std::abs(col_sum(a, j) - s0) > 1e-8 * std::max(1.0, s0))
            throw InvalidArgument("crs_spectral_check: column sums are not constant");
    const double r = spectral_radius(a);
    if (std::abs(r - s0) > 1e-6)
        throw NumericalError("crs_spectral_check: spectral radius " + std::to_string(r) +
                             " deviates from common column sum " + std::to_string(s0));
    return r;
}

}  // namespace econet
