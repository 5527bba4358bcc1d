#include "ergo/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace ergo {

Matrix::Matrix(std::size_t n, double fill) : n_(n), data_(n * n, fill) {
    if (n == 0) throw DimensionMismatch("matrix dimension must be at least 1");
}

Matrix::Matrix(std::size_t n, std::vector<double> entries)
    : n_(n), data_(std::move(entries)) {
    if (n == 0) throw DimensionMismatch("matrix dimension must be at least 1");
    if (data_.size() != n * n)
        throw DimensionMismatch("entry count does not match dimension");
    for (double v : data_)
        if (!std::isfinite(v)) throw Error("matrix entries must be finite");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::ones(std::size_t n) { return Matrix(n, 1.0); }

std::vector<double> Matrix::column(std::size_t j) const {
    std::vector<double> col(n_);
    for (std::size_t i = 0; i < n_; ++i) col[i] = (*this)(i, j);
    return col;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_symmetric(double tol) const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (n_ != rhs.n_) throw DimensionMismatch("matrix dimensions differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (n_ != rhs.n_) throw DimensionMismatch("matrix dimensions differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(double c) {
    for (double& v : data_) v *= c;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.n_ != rhs.n_) throw DimensionMismatch("matrix dimensions differ");
    const std::size_t n = lhs.n_;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double a = lhs(i, k);
            if (a == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

double default_row_sum_tolerance(const Matrix& m) {
    return 1e-9 * std::max(1.0, m.max_abs());
}

EMatrix EMatrix::validate(Matrix m, double tol) {
    if (tol < 0.0) tol = default_row_sum_tolerance(m);
    const std::size_t n = m.size();
    std::vector<double> sums(n, 0.0);
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (double v : m.row(i)) sums[i] += v;
        mean += sums[i];
    }
    mean /= static_cast<double>(n);
    std::size_t worst = 0;
    double worst_dev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dev = std::abs(sums[i] - mean);
        if (dev > worst_dev) {
            worst_dev = dev;
            worst = i;
        }
    }
    if (worst_dev > tol) throw NotConstantRowSum(worst, worst_dev);
    return EMatrix(std::move(m), mean, tol);
}

EMatrix EMatrix::from_parts(Matrix m, double trivial_eigenvalue, double tol) {
    if (tol < 0.0) tol = default_row_sum_tolerance(m);
    return EMatrix(std::move(m), trivial_eigenvalue, tol);
}

EMatrix validate_ematrix(const Matrix& m, double tol) {
    return EMatrix::validate(m, tol);
}

Matrix multiply(const Matrix& a, const Matrix& b) { return a * b; }

EMatrix multiply(const EMatrix& a, const EMatrix& b) {
    return EMatrix::from_parts(a.matrix() * b.matrix(),
                               a.trivial_eigenvalue() * b.trivial_eigenvalue());
}

namespace {

// Divides out the max absolute entry and folds it into the running log scale.
void normalize(Matrix& m, double& log_scale) {
    const double mx = m.max_abs();
    if (mx > 0.0) {
        m *= 1.0 / mx;
        log_scale += std::log(mx);
    }
}

}  // namespace

ScaledPower scaled_power(const EMatrix& a, std::int64_t k) {
    if (k < 1) throw Error("exponent must be at least 1");
    if (k == 1) return ScaledPower{a, 1, a.matrix(), 0.0};

    Matrix result = Matrix::identity(a.size());
    double result_log = 0.0;
    Matrix base = a.matrix();
    double base_log = 0.0;
    std::int64_t e = k;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
            result_log += base_log;
            normalize(result, result_log);
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
            base_log *= 2.0;
            normalize(base, base_log);
        }
    }
    return ScaledPower{a, k, std::move(result), result_log};
}

double reconstruct_entry(const ScaledPower& sp, std::size_t i, std::size_t j) {
    return sp.scaled_matrix(i, j) * std::exp(sp.log_scale);
}

namespace {

struct LU {
    Matrix lu;                     // combined L (unit diagonal) and U factors
    std::vector<std::size_t> perm; // row permutation
    int sign = 1;
    bool singular = false;
    std::size_t bad_pivot = 0;
    double bad_pivot_magnitude = 0.0;
};

LU lu_decompose(const Matrix& a) {
    const std::size_t n = a.size();
    const double threshold = 1e-12 * std::max(a.max_abs(), 1e-300);
    LU f{a, std::vector<std::size_t>(n), 1};
    for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        double pivot_mag = std::abs(f.lu(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(f.lu(r, col));
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = r;
            }
        }
        if (pivot_mag < threshold) {
            f.singular = true;
            f.bad_pivot = col;
            f.bad_pivot_magnitude = pivot_mag;
            return f;
        }
        if (pivot_row != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(f.lu(col, j), f.lu(pivot_row, j));
            std::swap(f.perm[col], f.perm[pivot_row]);
            f.sign = -f.sign;
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = f.lu(r, col) / f.lu(col, col);
            f.lu(r, col) = factor;
            for (std::size_t j = col + 1; j < n; ++j)
                f.lu(r, j) -= factor * f.lu(col, j);
        }
    }
    return f;
}

void lu_solve(const LU& f, const std::vector<double>& rhs, std::vector<double>& x) {
    const std::size_t n = f.perm.size();
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[f.perm[i]];
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
        x[i] /= f.lu(i, i);
    }
}

}  // namespace

EMatrix invert(const EMatrix& a) {
    const std::size_t n = a.size();
    const LU f = lu_decompose(a.matrix());
    if (f.singular) throw SingularMatrix(f.bad_pivot, f.bad_pivot_magnitude);
    Matrix inv(n);
    std::vector<double> rhs(n, 0.0), x(n);
    for (std::size_t col = 0; col < n; ++col) {
        rhs.assign(n, 0.0);
        rhs[col] = 1.0;
        lu_solve(f, rhs, x);
        for (std::size_t i = 0; i < n; ++i) inv(i, col) = x[i];
    }
    return EMatrix::from_parts(std::move(inv), 1.0 / a.trivial_eigenvalue());
}

double determinant(const Matrix& m) {
    const LU f = lu_decompose(m);
    if (f.singular) return 0.0;
    double det = static_cast<double>(f.sign);
    for (std::size_t i = 0; i < m.size(); ++i) det *= f.lu(i, i);
    return det;
}

EMatrix add_rank_one_shift(const EMatrix& a, double alpha) {
    Matrix m = a.matrix();
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) += alpha;
    return EMatrix::from_parts(std::move(m),
                               a.trivial_eigenvalue() + static_cast<double>(n) * alpha,
                               a.row_sum_tolerance());
}

EMatrix add_diagonal_shift(const EMatrix& a, double alpha) {
    Matrix m = a.matrix();
    for (std::size_t i = 0; i < m.size(); ++i) m(i, i) += alpha;
    return EMatrix::from_parts(std::move(m), a.trivial_eigenvalue() + alpha,
                               a.row_sum_tolerance());
}

double induced_norm(const Matrix& a, PNorm p) {
    const std::size_t n = a.size();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            sum += std::abs(p == PNorm::Infinity ? a(i, j) : a(j, i));
        best = std::max(best, sum);
    }
    return best;
}

}  // namespace ergo
