#include "ergo/bounds.hpp"

#include <cmath>
#include <limits>

namespace ergo {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// A - (lambda_A/n) J. Leaves every tau_p(A^k) unchanged while zeroing the
// trivial eigenvalue, so repeated squaring keeps the non-trivial structure
// above the floating-point noise floor even when lambda_A dominates.
EMatrix deflate(const EMatrix& a) {
    const double shift = -a.trivial_eigenvalue() / static_cast<double>(a.size());
    return add_rank_one_shift(a, shift);
}

double log_tau(const Matrix& scaled, double log_scale, PNorm p) {
    const double t = tau(scaled, p);
    return t > 0.0 ? std::log(t) + log_scale : kNegInf;
}

void normalize(Matrix& m, double& log_scale) {
    const double mx = m.max_abs();
    if (mx > 0.0) {
        m *= 1.0 / mx;
        log_scale += std::log(mx);
    }
}

}  // namespace

double largest_bound(const EMatrix& a, PNorm p, std::int64_t k) {
    if (k < 1) throw Error("power must be at least 1");
    const ScaledPower sp = scaled_power(deflate(a), k);
    const double lt = log_tau(sp.scaled_matrix, sp.log_scale, p);
    return lt == kNegInf ? 0.0 : std::exp(lt / static_cast<double>(k));
}

BoundSequence doubling_bounds(const EMatrix& a, PNorm p, int max_level) {
    if (max_level < 0 || max_level > 30)
        throw Error("doubling level must be in [0, 30]");
    BoundSequence seq{p, BoundMode::Doubling, BoundTarget::LargestNonTrivial, {}};
    Matrix s = deflate(a).matrix();
    double log_scale = 0.0;
    std::int64_t k = 1;
    for (int level = 0;; ++level) {
        const double lt = log_tau(s, log_scale, p);
        seq.entries.emplace_back(
            k, lt == kNegInf ? 0.0 : std::exp(lt / static_cast<double>(k)));
        if (level == max_level) break;
        s = s * s;
        log_scale *= 2.0;
        normalize(s, log_scale);
        k *= 2;
    }
    return seq;
}

LargestEstimate estimate_largest(const EMatrix& a, PNorm p, double rel_tol,
                                 int max_level) {
    if (rel_tol <= 0.0) throw Error("rel_tol must be positive");
    Matrix s = deflate(a).matrix();
    double log_scale = 0.0;
    std::int64_t k = 1;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int level = 0;; ++level) {
        const double lt = log_tau(s, log_scale, p);
        const double bound =
            lt == kNegInf ? 0.0 : std::exp(lt / static_cast<double>(k));
        if (bound == 0.0) return {0.0, level, true};
        if (level > 0 && std::abs(bound - prev) < rel_tol * prev)
            return {bound, level, true};
        if (level == max_level) return {bound, level, false};
        prev = bound;
        s = s * s;
        log_scale *= 2.0;
        normalize(s, log_scale);
        k *= 2;
    }
}

SimplicityReport simplicity_check(const EMatrix& a, PNorm p) {
    const double t = tau(a.matrix(), p);
    const double lambda = std::abs(a.trivial_eigenvalue());
    return SimplicityReport{a.trivial_eigenvalue(), t, lambda > t, lambda - t};
}

double smallest_bound_nonsingular(const EMatrix& a, PNorm p, std::int64_t k) {
    const double inverse_bound = largest_bound(invert(a), p, k);
    if (inverse_bound == 0.0)
        throw DegenerateCoefficient(
            "tau_p of the inverse power is zero; the reciprocal bound is undefined");
    return 1.0 / inverse_bound;
}

double smallest_bound_singular(const EMatrix& a, PNorm p, std::int64_t k,
                               double alpha) {
    if (alpha == 0.0) throw Error("shift alpha must be nonzero");
    const double tol =
        std::max(a.row_sum_tolerance(), default_row_sum_tolerance(a.matrix()));
    if (std::abs(a.trivial_eigenvalue()) > tol)
        throw TrivialEigenvalueNotZero(
            "the trivial eigenvalue must be zero for the shifted bound");
    return smallest_bound_nonsingular(add_rank_one_shift(a, alpha), p, k);
}

SmallestEstimate estimate_smallest(const EMatrix& a, PNorm p, double rel_tol,
                                   int max_level, std::optional<double> alpha) {
    if (rel_tol <= 0.0) throw Error("rel_tol must be positive");
    const double tol =
        std::max(a.row_sum_tolerance(), default_row_sum_tolerance(a.matrix()));
    const bool singular_trivial = std::abs(a.trivial_eigenvalue()) <= tol;
    EMatrix shifted = singular_trivial
                          ? add_rank_one_shift(a, alpha.value_or(default_shift_alpha(a)))
                          : a;
    Matrix s = deflate(invert(shifted)).matrix();
    double log_scale = 0.0;
    std::int64_t k = 1;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int level = 0;; ++level) {
        const double lt = log_tau(s, log_scale, p);
        if (lt == kNegInf) {
            if (level == 0)
                throw DegenerateCoefficient(
                    "tau_p of the inverse is zero; no finite estimate exists");
            return {prev, true};
        }
        const double estimate = std::exp(-lt / static_cast<double>(k));
        if (level > 0 && std::abs(estimate - prev) < rel_tol * prev)
            return {estimate, true};
        if (level == max_level) return {estimate, false};
        prev = estimate;
        s = s * s;
        log_scale *= 2.0;
        normalize(s, log_scale);
        k *= 2;
    }
}

ConstancyProbe constancy_probe(const EMatrix& a, PNorm p, int max_k) {
    if (max_k < 1 || max_k > 20) throw Error("max_k must be in [1, 20]");
    ConstancyProbe probe{{}, true, true};

    // Direct powers while the entries stay small; the deflated scaled chain
    // is maintained in parallel and takes over past the safety cutoff.
    const Matrix deflated = deflate(a).matrix();
    Matrix direct = a.matrix();
    Matrix s = deflated;
    double log_scale = 0.0;
    bool direct_safe = true;
    for (int k = 1; k <= max_k; ++k) {
        double value;
        if (direct_safe) {
            value = tau(direct, p);
        } else {
            const double lt = log_tau(s, log_scale, p);
            value = lt == kNegInf ? 0.0 : std::exp(lt);
        }
        probe.values.emplace_back(k, value);
        if (k == max_k) break;
        if (direct_safe) {
            direct = direct * a.matrix();
            if (direct.max_abs() > 1e12) direct_safe = false;
        }
        s = s * deflated;
        normalize(s, log_scale);
    }

    const double v0 = probe.values.front().second;
    const double slack = 1e-9 * std::max(1.0, std::abs(v0));
    for (const auto& [k, v] : probe.values)
        if (std::abs(v - v0) > slack) probe.constant_all = false;
    probe.first_two_equal =
        probe.values.size() < 2
            ? probe.constant_all
            : std::abs(probe.values[1].second - v0) <= slack;
    return probe;
}

double default_shift_alpha(const EMatrix& a) {
    return std::max(1.0, a.matrix().max_abs());
}

}  // namespace ergo
