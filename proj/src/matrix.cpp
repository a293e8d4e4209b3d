#include "econet/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace econet {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InvalidArgument("Matrix: ragged initializer list");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) { return Matrix(rows, cols, 1.0); }

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::nonnegative(double tol) const {
    return std::all_of(data_.begin(), data_.end(), [tol](double x) { return x >= -tol; });
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw InvalidArgument("Matrix::operator+=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw InvalidArgument("Matrix::operator-=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& x : data_) x *= s;
    return *this;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matmul: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Vector matvec(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) throw InvalidArgument("matvec: shape mismatch");
    Vector y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

Vector vecmat(const Vector& x, const Matrix& a) {
    if (a.rows() != x.size()) throw InvalidArgument("vecmat: shape mismatch");
    Vector y(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) y[j] += xi * a(i, j);
    }
    return y;
}

Matrix matpow(const Matrix& a, unsigned k) {
    if (!a.square()) throw InvalidArgument("matpow: matrix not square");
    Matrix result = Matrix::identity(a.rows());
    Matrix base = a;
    while (k > 0) {
        if (k & 1u) result = matmul(result, base);
        k >>= 1u;
        if (k > 0) base = matmul(base, base);
    }
    return result;
}

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InvalidArgument("dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm_l1(const Vector& v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

double norm_l2(const Vector& v) { return std::sqrt(dot(v, v)); }

double norm_linf(const Vector& v) {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::abs(x));
    return s;
}

Vector vadd(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InvalidArgument("vadd: size mismatch");
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector vsub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InvalidArgument("vsub: size mismatch");
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector vscale(const Vector& v, double s) {
    Vector r(v);
    for (double& x : r) x *= s;
    return r;
}

double max_abs_entry(const Matrix& a) {
    double m = 0.0;
    for (double x : a.data()) m = std::max(m, std::abs(x));
    return m;
}

double row_sum(const Matrix& a, std::size_t i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j);
    return s;
}

double col_sum(const Matrix& a, std::size_t j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, j);
    return s;
}

namespace {

// LU with partial pivoting; factors in place, returns permutation.
// Throws NumericalError when a pivot vanishes to working precision.
std::vector<std::size_t> lu_factor(Matrix& a) {
    const std::size_t n = a.rows();
    if (!a.square()) throw InvalidArgument("solve: matrix not square");
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    const double scale = std::max(max_abs_entry(a), 1.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
        if (std::abs(a(p, k)) <= 1e-13 * scale)
            throw NumericalError("solve: matrix is singular to working precision");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            std::swap(perm[k], perm[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            a(i, k) /= a(k, k);
            const double lik = a(i, k);
            if (lik == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= lik * a(k, j);
        }
    }
    return perm;
}

Vector lu_solve(const Matrix& lu, const std::vector<std::size_t>& perm, const Vector& b) {
    const std::size_t n = lu.rows();
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[perm[i]];
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= lu(ii, j) * x[j];
        x[ii] /= lu(ii, ii);
    }
    return x;
}

}  // namespace

Vector solve(const Matrix& a, const Vector& b) {
    if (a.rows() != b.size()) throw InvalidArgument("solve: shape mismatch");
    Matrix lu = a;
    auto perm = lu_factor(lu);
    return lu_solve(lu, perm, b);
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw InvalidArgument("solve: shape mismatch");
    Matrix lu = a;
    auto perm = lu_factor(lu);
    Matrix x(a.rows(), b.cols());
    Vector col(a.rows());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) col[i] = b(i, j);
        Vector xi = lu_solve(lu, perm, col);
        for (std::size_t i = 0; i < a.rows(); ++i) x(i, j) = xi[i];
    }
    return x;
}

Matrix inverse(const Matrix& a) { return solve(a, Matrix::identity(a.rows())); }

std::size_t rank(Matrix a, double tol) {
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t p = r;
        for (std::size_t i = r + 1; i < m; ++i)
            if (std::abs(a(i, col)) > std::abs(a(p, col))) p = i;
        if (std::abs(a(p, col)) <= tol) continue;
        if (p != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(p, j));
        for (std::size_t i = r + 1; i < m; ++i) {
            const double f = a(i, col) / a(r, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace econet
