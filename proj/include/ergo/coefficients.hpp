#pragma once

#include <span>

#include "ergo/matrix.hpp"

namespace ergo {

struct ColumnStat {
    std::size_t column_index;
    double cs_value;
};

/// Sorts the column in non-increasing order and returns the sum of the upper
/// half minus the sum of the lower half (the middle element is skipped when
/// the length is odd).
ColumnStat column_stat(std::span<const double> column, std::size_t index);

/// Max of column_stat over all columns.
double rho_hat(const Matrix& m);

/// Explicit form of the l_inf ergodicity coefficient. The equality with the
/// variational definition is established on constant row-sum matrices; the
/// formula itself is evaluated for any real square matrix.
double tau_inf(const Matrix& m);

/// Explicit form of the l_1 ergodicity coefficient:
/// half the max over row pairs of the l_1 distance between the rows.
double tau_1(const Matrix& m);

/// Second form of the explicit tau_1, valid on constant row-sum matrices:
/// lambda_A - min over row pairs of sum_k min(a_ik, a_jk).
double tau_1_minform(const EMatrix& a);

double tau(const Matrix& m, PNorm p);

}  // namespace ergo
