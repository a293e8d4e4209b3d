#pragma once

#include <string>
#include <vector>

#include "econet/matrix.hpp"

namespace econet {

/// Inter-industry accounts in currency units: Z[i][j] = sales from i to j,
/// x = total sales, d = final demand (optional, empty when absent).
struct IOTable {
    Matrix Z;
    Vector x;
    Vector d;  // empty = not provided

    /// Validates shapes, nonnegativity and (when d is present) the accounting
    /// identity x = Z 1 + d to the given relative tolerance.
    void validate(double rel_tol = 1e-6) const;

    /// Drops sectors with x_j = 0 and an all-zero row and column of Z.
    /// Returns the reduced table and fills `kept` with the retained original
    /// sector indices.
    IOTable compacted(std::vector<int>& kept) const;
};

struct IOCoefficients {
    Matrix A;     // a_ij = z_ij / x_j
    Vector eta;   // column sums of A (spending shares)
};

IOCoefficients io_coefficients(const IOTable& t);

/// Ghosh (forward-linkage) matrix f_ij = z_ij / x_i.
Matrix ghosh_matrix(const IOTable& t);

/// L = (I - A)^{-1}; requires r(A) < 1 (checked).
Matrix leontief_inverse(const Matrix& a);

/// x* = L d, the unique nonnegative solution of x = A x + d.
Vector equilibrium_output(const Matrix& a, const Vector& d);

/// [dd, A dd, A^2 dd, ..., A^k dd].
std::vector<Vector> shock_rounds(const Matrix& a, const Vector& dd, int k);

/// mu^T = 1^T (I - A)^{-1}: impact of an extra unit of demand per sector.
Vector output_multipliers(const Matrix& a);

/// u = (I - F)^{-1} 1, the recursive upstreamness measure.
Vector upstreamness(const Matrix& f);

/// h = L 1 / n, the Domar weights under symmetric final demand.
Vector domar_weights(const Matrix& a);

/// sigma_g = sigma * ||h||_2.
double aggregate_volatility(const Vector& h, double sigma);

struct ConstrainedEquilibrium {
    Vector x;
    long iterations;
    bool unique_certified;
    std::string certificate;  // spectral-radius | du | none
};

/// Least fixed point of G x = (A x + d) ^ xbar, iterated monotonically from 0.
/// Uniqueness is certified when r(A) < 1, or when d >> 0 and xbar >> 0; with
/// no certificate the least fixed point is returned with the flag cleared.
ConstrainedEquilibrium constrained_equilibrium(const Matrix& a, const Vector& d,
                                               const Vector& xbar, double tol = 1e-10);

/// x* = (I - alpha A)^{-1} eps, the unique Nash equilibrium of the quadratic
/// network game. Requires r(A) < 1/alpha.
Vector quadratic_game_nash(const Matrix& a, double alpha, const Vector& eps);

/// For A with every column summing to 1 - alpha, returns spectral_radius(A),
/// which must equal 1 - alpha within 1e-6.
double crs_spectral_check(const Matrix& a);

}  // namespace econet
