#include "ergo/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ergo {

namespace {

constexpr std::size_t kMaxCharPolyDim = 14;

std::complex<double> horner(std::span<const std::complex<double>> coeffs,
                            std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

}  // namespace

std::vector<double> characteristic_polynomial(const Matrix& m) {
    const std::size_t n = m.size();
    if (n > kMaxCharPolyDim)
        throw DimensionTooLarge("characteristic polynomial limited to n <= 14");
    std::vector<double> coeffs(n + 1, 0.0);
    coeffs[n] = 1.0;
    Matrix work = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix shifted = work;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeffs[n - k + 1];
            work = m * shifted;
        }
        coeffs[n - k] = -work.trace() / static_cast<double>(k);
    }
    return coeffs;
}

std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs) {
    if (coeffs.empty()) throw Error("empty coefficient list");
    const std::size_t degree = coeffs.size() - 1;
    if (degree > kMaxCharPolyDim)
        throw DimensionTooLarge("root finding limited to degree <= 14");
    const double lead = coeffs[degree];
    if (lead == 0.0) throw Error("leading coefficient must be nonzero");
    if (degree == 0) return {};

    std::vector<std::complex<double>> monic(degree + 1);
    double max_ratio = 0.0;
    for (std::size_t i = 0; i <= degree; ++i) {
        monic[i] = coeffs[i] / lead;
        if (i < degree) max_ratio = std::max(max_ratio, std::abs(coeffs[i] / lead));
    }
    std::vector<std::complex<double>> deriv(degree);
    for (std::size_t i = 1; i <= degree; ++i)
        deriv[i - 1] = monic[i] * static_cast<double>(i);

    const double radius = 1.0 + max_ratio;
    std::vector<std::complex<double>> z(degree);
    const double offset = std::numbers::sqrt2 - 1.0;  // irrational, avoids axis alignment
    for (std::size_t i = 0; i < degree; ++i) {
        const double angle =
            2.0 * std::numbers::pi * (static_cast<double>(i) + offset) /
            static_cast<double>(degree);
        z[i] = std::polar(radius, angle);
    }

    const double stop = 1e-12 * radius;
    for (int iter = 0; iter < 500; ++iter) {
        double max_update = 0.0;
        for (std::size_t i = 0; i < degree; ++i) {
            const std::complex<double> p = horner(monic, z[i]);
            if (p == 0.0) continue;
            std::complex<double> dp = horner(deriv, z[i]);
            if (dp == 0.0) dp = 1e-30;
            const std::complex<double> newton = p / dp;
            std::complex<double> repulsion = 0.0;
            for (std::size_t j = 0; j < degree; ++j) {
                if (j == i) continue;
                std::complex<double> diff = z[i] - z[j];
                if (diff == 0.0) diff = 1e-30;
                repulsion += 1.0 / diff;
            }
            const std::complex<double> denom = 1.0 - newton * repulsion;
            const std::complex<double> step =
                denom == 0.0 ? newton : newton / denom;
            z[i] -= step;
            max_update = std::max(max_update, std::abs(step));
        }
        if (max_update < stop) break;
    }
    return z;
}

std::vector<double> jacobi_eigenvalues(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix a = m;
    const double frob_scale = 1.0 + std::sqrt([&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s += a(i, j) * a(i, j);
        return s;
    }());

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
        if (std::sqrt(off) < 1e-12 * frob_scale) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double app = a(p, p), aqq = a(q, q), apq = a(p, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p), arq = a(r, q);
                    a(r, p) = a(p, r) = c * arp - s * arq;
                    a(r, q) = a(q, r) = s * arp + c * arq;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

Spectrum spectrum(const Matrix& m) {
    const std::size_t n = m.size();
    Spectrum out;
    if (m.is_symmetric(1e-12 * std::max(1.0, m.max_abs()))) {
        out.method = SpectrumMethod::JacobiSymmetric;
        const std::vector<double> eig = jacobi_eigenvalues(m);
        out.eigenvalues.assign(eig.begin(), eig.end());
        // trace defect as the residual proxy for the rotation path
        double frob = 0.0;
        double trace_err = m.trace();
        for (double v : eig) trace_err -= v;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) frob += m(i, j) * m(i, j);
        out.max_residual = std::abs(trace_err) / (1.0 + std::sqrt(frob));
    } else {
        out.method = SpectrumMethod::CharPolyRoots;
        const std::vector<double> coeffs = characteristic_polynomial(m);
        out.eigenvalues = polynomial_roots(coeffs);
        out.max_residual = 0.0;
        for (const auto& root : out.eigenvalues) {
            std::vector<std::complex<double>> c(coeffs.begin(), coeffs.end());
            const double num = std::abs(horner(c, root));
            double scale = 0.0;
            double power = 1.0;
            for (double cf : coeffs) {
                scale += std::abs(cf) * power;
                power *= std::abs(root);
            }
            out.max_residual =
                std::max(out.max_residual, num / std::max(1.0, scale));
        }
        if (out.max_residual > 1e-6)
            throw NonConvergence("root iteration failed to converge");
    }
    std::stable_sort(out.eigenvalues.begin(), out.eigenvalues.end(),
                     [](const auto& a, const auto& b) {
                         return std::abs(a) < std::abs(b);
                     });
    return out;
}

std::pair<double, double> nontrivial_extremes(const EMatrix& m) {
    if (m.size() < 2) throw DimensionMismatch("need at least a 2x2 matrix");
    const Spectrum s = spectrum(m.matrix());
    std::size_t trivial = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        const double d = std::abs(s.eigenvalues[i] - m.trivial_eigenvalue());
        if (d < best) {
            best = d;
            trivial = i;
        }
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        if (i == trivial) continue;
        const double mod = std::abs(s.eigenvalues[i]);
        lo = std::min(lo, mod);
        hi = std::max(hi, mod);
    }
    return {lo, hi};
}

}  // namespace ergo
