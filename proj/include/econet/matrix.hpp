#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "econet/errors.hpp"

namespace econet {

using Vector = std::vector<double>;

/// Dense real square-or-rectangular matrix, row-major.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix ones(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    Matrix transpose() const;
    bool nonnegative(double tol = 0.0) const;
    bool all_finite() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, double s) { return a *= s; }
    friend Matrix operator*(double s, Matrix a) { return a *= s; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& a, const Vector& x);
Vector vecmat(const Vector& x, const Matrix& a);  // row vector times matrix
Matrix matpow(const Matrix& a, unsigned k);

double dot(const Vector& a, const Vector& b);
double norm_l1(const Vector& v);
double norm_l2(const Vector& v);
double norm_linf(const Vector& v);
Vector vadd(const Vector& a, const Vector& b);
Vector vsub(const Vector& a, const Vector& b);
Vector vscale(const Vector& v, double s);

double max_abs_entry(const Matrix& a);
double row_sum(const Matrix& a, std::size_t i);
double col_sum(const Matrix& a, std::size_t j);

/// Solves A x = b by LU factorization with partial pivoting.
/// Throws NumericalError when A is singular to working precision.
Vector solve(const Matrix& a, const Vector& b);

/// Solves A X = B column by column.
Matrix solve(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& a);

/// Numerical rank via row echelon reduction with the given pivot tolerance.
std::size_t rank(Matrix a, double tol = 1e-10);

}  // namespace econet
