#pragma once

#include <utility>

#include "econet/matrix.hpp"

namespace econet {

/// Dominant eigenpair of a nonnegative matrix: radius r(A), right vector e
/// (normalized to sum 1) and left vector eps rescaled so <eps, e> = 1.
struct DominantEigenpair {
    double radius;
    Vector right;
    Vector left;
    long iterations;
};

enum class MatrixNormKind { Frobenius, Operator, L1, Linf };

inline constexpr double kDefaultTol = 1e-10;
inline constexpr long kDefaultMaxIter = 100000;

/// Maximum modulus among the eigenvalues of a general real matrix.
/// Computed by normalized repeated squaring of the l1 norm (the limit
/// ||A^m||^(1/m) taken along m = 2^k), accurate to ~1e-9 relative.
double spectral_radius(const Matrix& a);

/// Row/column-sum bracket for r(A), A >= 0:
/// max(min row sum, min col sum) <= r(A) <= min(max row sum, max col sum).
std::pair<double, double> spectral_radius_bounds(const Matrix& a);

double matrix_norm(const Matrix& a, MatrixNormKind kind);

/// The sequence ||A^k||^(1/k) for k = 1..steps in the given norm.
Vector gelfand_estimate(const Matrix& a, MatrixNormKind kind, int steps);

/// Power iteration on A and on A^T. Convergence is guaranteed for primitive
/// input; period-2 oscillation (imprimitive input) is detected and reported.
DominantEigenpair dominant_eigenpair(const Matrix& a, double tol = kDefaultTol,
                                     long max_iter = kDefaultMaxIter);

/// Rank-one projection e * eps^T built from a normalized dominant pair.
Matrix perron_projection(const DominantEigenpair& pair);

/// (I - A)^{-1} via the truncated Neumann series when ||A||_inf < 1, with the
/// a-posteriori remainder bound as stopping rule; otherwise a direct solve.
/// Requires r(A) < 1 (checked).
Matrix neumann_inverse(const Matrix& a, double tol = kDefaultTol);

/// Unique solution of x = A x + b when r(A) < 1 (checked).
Vector solve_neumann(const Matrix& a, const Vector& b, double tol = kDefaultTol);

/// ||A^m x||^(1/m) for A >= 0 and x >> 0; converges to r(A) as m grows.
double local_spectral_radius(const Matrix& a, const Vector& x, int m);

}  // namespace econet
