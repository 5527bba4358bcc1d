#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ergo/coefficients.hpp"
#include "ergo/matrix.hpp"

namespace ergo {

enum class BoundMode { AllK, Doubling };
enum class BoundTarget { LargestNonTrivial, SmallestNonTrivial };

/// Ordered (k, bound) records from a power-bound run.
struct BoundSequence {
    PNorm p;
    BoundMode mode;
    BoundTarget target;
    std::vector<std::pair<std::int64_t, double>> entries;
};

/// The gap certificate |lambda_A| > tau_p(A): when it holds, the trivial
/// eigenvalue is simple, dominant, and separated by at least the gap.
struct SimplicityReport {
    double trivial_eigenvalue;
    double tau_value;
    bool is_certified_simple;
    double gap_lower_bound;
};

struct LargestEstimate {
    double estimate;
    int levels_used;
    bool converged;
};

struct SmallestEstimate {
    double estimate;
    bool converged;
};

struct ConstancyProbe {
    std::vector<std::pair<int, double>> values;  // (k, raw tau_p(A^k))
    bool constant_all;
    bool first_two_equal;
};

/// Upper bound tau_p(A^k)^(1/k) on the modulus of every non-trivial
/// eigenvalue (and of lambda_A too when lambda_A is not simple).
double largest_bound(const EMatrix& a, PNorm p, std::int64_t k);

/// Bounds at k = 1, 2, 4, ..., 2^max_level; monotone non-increasing.
BoundSequence doubling_bounds(const EMatrix& a, PNorm p, int max_level);

/// Runs the doubling sequence until the relative change drops below rel_tol.
LargestEstimate estimate_largest(const EMatrix& a, PNorm p, double rel_tol,
                                 int max_level);

SimplicityReport simplicity_check(const EMatrix& a, PNorm p);

/// Lower bound 1/tau_p(A^-k)^(1/k) on the smallest non-trivial eigenvalue
/// modulus of a nonsingular matrix.
double smallest_bound_nonsingular(const EMatrix& a, PNorm p, std::int64_t k);

/// Same lower bound for a singular matrix whose trivial eigenvalue 0 is
/// simple, routed through the rank-one shift A + alpha*J.
double smallest_bound_singular(const EMatrix& a, PNorm p, std::int64_t k,
                               double alpha);

/// Doubling iteration on the (shifted) inverse; alpha is required for
/// singular input and defaults to max(1, max|entry|) when omitted.
SmallestEstimate estimate_smallest(const EMatrix& a, PNorm p, double rel_tol,
                                   int max_level,
                                   std::optional<double> alpha = std::nullopt);

/// Raw tau_p(A^k) for k = 1..max_k, probing whether the sequence is constant.
ConstancyProbe constancy_probe(const EMatrix& a, PNorm p, int max_k);

double default_shift_alpha(const EMatrix& a);

}  // namespace ergo
