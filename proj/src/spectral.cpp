#include "econet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace econet {

namespace {

// Induced l1 norm: max absolute column sum.
double induced_l1(const Matrix& a) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

// Induced linf norm: max absolute row sum.
double induced_linf(const Matrix& a) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

double frobenius(const Matrix& a) {
    double s = 0.0;
    for (double x : a.data()) s += x * x;
    return std::sqrt(s);
}

}  // namespace

double spectral_radius(const Matrix& a) {
    if (!a.square()) throw InvalidArgument("spectral_radius: matrix not square");
    if (a.rows() == 0) return 0.0;
    // Gelfand limit ||A^m||_1^{1/m} taken along m = 2^k with per-step
    // normalization. The log of the estimate is sum_j ln(n_j) / 2^j where
    // n_j is the norm of the normalized square at step j.
    Matrix b = a;
    double log_estimate = 0.0;
    double pow2 = 1.0;
    for (int k = 0; k < 64; ++k) {
        const double n = induced_l1(b);
        if (n == 0.0) return 0.0;
        const double increment = std::log(n) / pow2;
        log_estimate += increment;
        if (k > 4 && std::abs(increment) < 1e-15) break;
        b *= 1.0 / n;
        b = matmul(b, b);
        pow2 *= 2.0;
    }
    return std::exp(log_estimate);
}

std::pair<double, double> spectral_radius_bounds(const Matrix& a) {
    if (!a.square()) throw InvalidArgument("spectral_radius_bounds: matrix not square");
    if (!a.nonnegative()) throw InvalidArgument("spectral_radius_bounds: negative entry");
    const std::size_t n = a.rows();
    if (n == 0) return {0.0, 0.0};
    double rmin = row_sum(a, 0), rmax = rmin;
    double cmin = col_sum(a, 0), cmax = cmin;
    for (std::size_t i = 1; i < n; ++i) {
        const double rs = row_sum(a, i), cs = col_sum(a, i);
        rmin = std::min(rmin, rs);
        rmax = std::max(rmax, rs);
        cmin = std::min(cmin, cs);
        cmax = std::max(cmax, cs);
    }
    return {std::max(rmin, cmin), std::min(rmax, cmax)};
}

double matrix_norm(const Matrix& a, MatrixNormKind kind) {
    switch (kind) {
        case MatrixNormKind::Frobenius:
            return frobenius(a);
        case MatrixNormKind::Operator:
            return std::sqrt(spectral_radius(matmul(a.transpose(), a)));
        case MatrixNormKind::L1:
            return induced_l1(a);
        case MatrixNormKind::Linf:
            return induced_linf(a);
    }
    throw InvalidArgument("matrix_norm: unknown kind");
}

Vector gelfand_estimate(const Matrix& a, MatrixNormKind kind, int steps) {
    if (steps < 1) throw InvalidArgument("gelfand_estimate: steps must be >= 1");
    Vector seq;
    seq.reserve(steps);
    Matrix p = a;
    for (int k = 1; k <= steps; ++k) {
        const double n = matrix_norm(p, kind);
        if (!std::isfinite(n))
            throw NumericalError("gelfand_estimate: overflow at k=" + std::to_string(k) +
                                 "; rescale the input matrix");
        seq.push_back(n == 0.0 ? 0.0 : std::pow(n, 1.0 / k));
        if (k < steps) p = matmul(p, a);
    }
    return seq;
}

namespace {

struct PowerResult {
    Vector vec;    // l1-normalized, entries >= 0
    double value;  // eigenvalue estimate
    long iterations;
};

PowerResult power_iterate(const Matrix& a, double tol, long max_iter) {
    const std::size_t n = a.rows();
    Vector x(n, 1.0 / static_cast<double>(n));
    Vector prev2;
    for (long it = 0; it < max_iter; ++it) {
        Vector y = matvec(a, x);
        const double lambda = norm_l1(y);  // x >= 0 and sums to 1
        if (lambda == 0.0) return {x, 0.0, it};
        Vector ynorm = vscale(y, 1.0 / lambda);
        double resid = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            resid = std::max(resid, std::abs(y[i] - lambda * x[i]));
        if (resid <= tol * std::max(1.0, lambda)) return {ynorm, lambda, it + 1};
        if (!prev2.empty() && it > 16) {
            double osc = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                osc = std::max(osc, std::abs(ynorm[i] - prev2[i]));
            if (osc <= tol && resid > 100 * tol)
                throw NumericalError(
                    "power iteration oscillates with period 2 (matrix may be "
                    "imprimitive); residual " + std::to_string(resid) +
                    ", tol " + std::to_string(tol), it);
        }
        prev2 = x;
        x = std::move(ynorm);
    }
    throw NumericalError("power iteration failed to converge after " +
                             std::to_string(max_iter) + " iterations (tol " +
                             std::to_string(tol) + ")",
                         max_iter);
}

}  // namespace

DominantEigenpair dominant_eigenpair(const Matrix& a, double tol, long max_iter) {
    if (!a.square()) throw InvalidArgument("dominant_eigenpair: matrix not square");
    if (!a.nonnegative()) throw InvalidArgument("dominant_eigenpair: negative entry");
    if (a.rows() == 0) throw InvalidArgument("dominant_eigenpair: empty matrix");
    PowerResult right = power_iterate(a, tol, max_iter);
    PowerResult left = power_iterate(a.transpose(), tol, max_iter);
    const double inner = dot(left.vec, right.vec);
    if (inner <= 0.0)
        throw NumericalError("dominant_eigenpair: left/right vectors are orthogonal "
                             "(matrix is reducible in a degenerate way)");
    Vector eps = vscale(left.vec, 1.0 / inner);
    return {right.value, right.vec, eps, right.iterations + left.iterations};
}

Matrix perron_projection(const DominantEigenpair& pair) {
    const std::size_t n = pair.right.size();
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = pair.right[i] * pair.left[j];
    return p;
}

namespace {

double checked_radius_below_one(const Matrix& a, const char* caller) {
    const double r = spectral_radius(a);
    if (r >= 1.0 - 1e-12)
        throw SpectralRadiusError(std::string(caller) + ": spectral radius " +
                                      std::to_string(r) + " is not below 1",
                                  r);
    return r;
}

}  // namespace

Matrix neumann_inverse(const Matrix& a, double tol) {
    if (!a.square()) throw InvalidArgument("neumann_inverse: matrix not square");
    checked_radius_below_one(a, "neumann_inverse");
    const std::size_t n = a.rows();
    const double ainf = induced_linf(a);
    if (ainf <= 0.9) {  // series is cheap only when the contraction is clear
        // Partial sums of I + A + A^2 + ...; the remainder after the A^m term
        // is bounded by ||A^m||_inf / (1 - ||A||_inf).
        Matrix sum = Matrix::identity(n);
        Matrix term = Matrix::identity(n);
        for (long m = 1; m < kDefaultMaxIter; ++m) {
            term = matmul(term, a);
            sum += term;
            if (induced_linf(term) / (1.0 - ainf) <= tol) return sum;
        }
        throw NumericalError("neumann_inverse: series did not reach tolerance " +
                             std::to_string(tol));
    }
    Matrix i_minus_a = Matrix::identity(n);
    i_minus_a -= a;
    return solve(i_minus_a, Matrix::identity(n));
}

Vector solve_neumann(const Matrix& a, const Vector& b, double tol) {
    if (!a.square() || a.rows() != b.size())
        throw InvalidArgument("solve_neumann: shape mismatch");
    checked_radius_below_one(a, "solve_neumann");
    (void)tol;
    Matrix i_minus_a = Matrix::identity(a.rows());
    i_minus_a -= a;
    return solve(i_minus_a, b);
}

double local_spectral_radius(const Matrix& a, const Vector& x, int m) {
    if (!a.square() || a.rows() != x.size())
        throw InvalidArgument("local_spectral_radius: shape mismatch");
    if (!a.nonnegative()) throw InvalidArgument("local_spectral_radius: negative entry");
    if (m < 1) throw InvalidArgument("local_spectral_radius: m must be >= 1");
    for (double xi : x)
        if (!(xi > 0.0))
            throw InvalidArgument("local_spectral_radius: x must be strictly positive");
    Vector y = x;
    double log_scale = 0.0;
    for (int i = 0; i < m; ++i) {
        y = matvec(a, y);
        const double n = norm_l2(y);
        if (n == 0.0) return 0.0;
        log_scale += std::log(n);
        y = vscale(y, 1.0 / n);
    }
    return std::exp(log_scale / m);
}

}  // namespace econet
