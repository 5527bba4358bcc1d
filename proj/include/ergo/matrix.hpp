#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ergo/errors.hpp"

namespace ergo {

/// Dense real square matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0);
    Matrix(std::size_t n, std::vector<double> entries);

    static Matrix identity(std::size_t n);
    /// The all-ones matrix J.
    static Matrix ones(std::size_t n);

    std::size_t size() const { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * n_, n_};
    }
    std::vector<double> column(std::size_t j) const;

    double max_abs() const;
    double trace() const;
    Matrix transpose() const;
    bool is_symmetric(double tol) const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(double c);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, double c) { return lhs *= c; }
    friend Matrix operator*(double c, Matrix rhs) { return rhs *= c; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// Validated constant row-sum matrix with its trivial eigenvalue attached.
class EMatrix {
public:
    /// Checks the constant row-sum invariant; tol < 0 selects the default
    /// 1e-9 * max(1, max|entry|). Throws NotConstantRowSum on failure.
    static EMatrix validate(Matrix m, double tol = -1.0);

    /// Constructs without revalidation, for operations that preserve the
    /// row-sum invariant by construction (products, shifts, inverses).
    static EMatrix from_parts(Matrix m, double trivial_eigenvalue, double tol = -1.0);

    const Matrix& matrix() const { return matrix_; }
    std::size_t size() const { return matrix_.size(); }
    double trivial_eigenvalue() const { return trivial_eigenvalue_; }
    double row_sum_tolerance() const { return row_sum_tolerance_; }

private:
    EMatrix(Matrix m, double lambda, double tol)
        : matrix_(std::move(m)), trivial_eigenvalue_(lambda), row_sum_tolerance_(tol) {}

    Matrix matrix_;
    double trivial_eigenvalue_ = 0.0;
    double row_sum_tolerance_ = 0.0;
};

/// A^k held as scaled_matrix * exp(log_scale) to keep entries away from
/// overflow during binary exponentiation.
struct ScaledPower {
    EMatrix base;
    std::int64_t exponent;
    Matrix scaled_matrix;
    double log_scale;
};

double default_row_sum_tolerance(const Matrix& m);

EMatrix validate_ematrix(const Matrix& m, double tol = -1.0);

Matrix multiply(const Matrix& a, const Matrix& b);
EMatrix multiply(const EMatrix& a, const EMatrix& b);

ScaledPower scaled_power(const EMatrix& a, std::int64_t k);

/// Reconstructs one entry of A^k from a ScaledPower.
double reconstruct_entry(const ScaledPower& sp, std::size_t i, std::size_t j);

EMatrix invert(const EMatrix& a);

/// Determinant via LU with partial pivoting; 0.0 for numerically singular input.
double determinant(const Matrix& m);

/// A + alpha*J. Shifts the trivial eigenvalue by n*alpha, leaves the rest fixed.
EMatrix add_rank_one_shift(const EMatrix& a, double alpha);

/// A + alpha*I. Shifts every eigenvalue by alpha.
EMatrix add_diagonal_shift(const EMatrix& a, double alpha);

enum class PNorm { One, Infinity };

/// Induced matrix norm: max column abs sum (p=1) or max row abs sum (p=inf).
double induced_norm(const Matrix& a, PNorm p);

}  // namespace ergo
