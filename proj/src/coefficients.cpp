#include "ergo/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace ergo {

ColumnStat column_stat(std::span<const double> column, std::size_t index) {
    std::vector<double> b(column.begin(), column.end());
    std::stable_sort(b.begin(), b.end(), std::greater<>());
    const std::size_t n = b.size();
    const std::size_t half = n / 2;
    double upper = 0.0, lower = 0.0;
    for (std::size_t i = 0; i < half; ++i) upper += b[i];
    // for odd n the middle element b[half] is skipped
    for (std::size_t i = n - half; i < n; ++i) lower += b[i];
    return ColumnStat{index, upper - lower};
}

double rho_hat(const Matrix& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j)
        best = std::max(best, column_stat(m.column(j), j).cs_value);
    return best;
}

double tau_inf(const Matrix& m) { return rho_hat(m); }

double tau_1(const Matrix& m) {
    const std::size_t n = m.size();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                sum += std::abs(m(i, k) - m(j, k));
            best = std::max(best, sum);
        }
    }
    return 0.5 * best;
}

double tau_1_minform(const EMatrix& a) {
    const Matrix& m = a.matrix();
    const std::size_t n = m.size();
    if (n == 1) return 0.0;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                sum += std::min(m(i, k), m(j, k));
            worst = std::min(worst, sum);
        }
    }
    return a.trivial_eigenvalue() - worst;
}

double tau(const Matrix& m, PNorm p) {
    return p == PNorm::One ? tau_1(m) : tau_inf(m);
}

}  // namespace ergo
