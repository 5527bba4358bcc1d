#include "ergo/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace ergo {

Graph::Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(n), neighbors_(n), adj_(n * n, 0) {
    if (n == 0) throw Error("graph needs at least one vertex");
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw Error("edge endpoint out of range");
        if (u == v) throw Error("self-loops are not allowed in a simple graph");
        if (u > v) std::swap(u, v);
        if (adj_[u * n + v]) continue;  // duplicate edges collapse
        adj_[u * n + v] = adj_[v * n + u] = 1;
        edges_.emplace_back(u, v);
        neighbors_[u].push_back(v);
        neighbors_[v].push_back(u);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& nbrs : neighbors_) std::sort(nbrs.begin(), nbrs.end());
}

std::size_t Graph::max_degree() const {
    std::size_t d = 0;
    for (std::size_t v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

EMatrix laplacian(const Graph& g) {
    const std::size_t n = g.vertex_count();
    Matrix l(n);
    for (std::size_t v = 0; v < n; ++v)
        l(v, v) = static_cast<double>(g.degree(v));
    for (auto [u, v] : g.edges()) {
        l(u, v) = -1.0;
        l(v, u) = -1.0;
    }
    return EMatrix::from_parts(std::move(l), 0.0);
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!frontier.empty()) {
        const std::size_t v = frontier.front();
        frontier.pop();
        for (std::size_t w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                frontier.push(w);
            }
        }
    }
    return count == n;
}

namespace {

int common_neighbors(const Graph& g, std::size_t i, std::size_t j) {
    int count = 0;
    for (std::size_t k = 0; k < g.vertex_count(); ++k)
        if (g.adjacent(i, k) && g.adjacent(j, k)) ++count;
    return count;
}

int pair_statistic(const Graph& g, std::size_t i, std::size_t j) {
    return static_cast<int>(g.degree(i)) + static_cast<int>(g.degree(j)) -
           common_neighbors(g, i, j);
}

}  // namespace

int tau1_laplacian(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw Error("need at least two vertices");
    int best = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            best = std::max(best, pair_statistic(g, i, j));
    return best;
}

int tau_inf_laplacian(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw Error("need at least two vertices");
    const std::size_t d = g.max_degree();
    return 2 * d >= n ? static_cast<int>(n) : static_cast<int>(2 * d);
}

int das_bound(const Graph& g) {
    if (g.edges().empty()) throw NoEdges("the graph has no edges");
    int best = 0;
    for (auto [u, v] : g.edges()) best = std::max(best, pair_statistic(g, u, v));
    return best;
}

BoundSequence spectral_radius_bounds(const Graph& g, PNorm p, int max_k) {
    if (g.vertex_count() < 2) throw Error("need at least two vertices");
    if (max_k < 1) throw Error("max_k must be at least 1");
    const EMatrix l = laplacian(g);
    BoundSequence seq{p, BoundMode::AllK, BoundTarget::LargestNonTrivial, {}};
    for (int k = 1; k <= max_k; ++k)
        seq.entries.emplace_back(k, largest_bound(l, p, k));
    return seq;
}

ConnectivityReport connectivity_lower_bound_shift(const Graph& g, PNorm p,
                                                  std::int64_t k, double alpha) {
    if (!is_connected(g))
        throw GraphDisconnected("connectivity bounds require a connected graph");
    const double bound = smallest_bound_singular(laplacian(g), p, k, alpha);
    return ConnectivityReport{p, ConnectivityMethod::RankOneShift, k, alpha, bound};
}

namespace {

double sup_objective(const EMatrix& l, PNorm p, std::int64_t k, double alpha) {
    return smallest_bound_nonsingular(add_diagonal_shift(l, alpha), p, k) - alpha;
}

}  // namespace

ConnectivityReport connectivity_lower_bound_sup(const Graph& g, PNorm p,
                                                std::int64_t k,
                                                std::span<const double> alpha_grid) {
    if (!is_connected(g))
        throw GraphDisconnected("connectivity bounds require a connected graph");
    if (alpha_grid.empty()) throw Error("alpha grid must not be empty");
    for (double a : alpha_grid)
        if (a <= 0.0) throw Error("alpha grid values must be positive");

    const EMatrix l = laplacian(g);
    std::size_t best_idx = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
        const double value = sup_objective(l, p, k, alpha_grid[i]);
        if (value > best_value) {
            best_value = value;
            best_idx = i;
        }
    }

    // golden-section refinement between the grid neighbors of the best point
    double lo = best_idx > 0 ? alpha_grid[best_idx - 1] : alpha_grid[best_idx] / 2.0;
    double hi = best_idx + 1 < alpha_grid.size() ? alpha_grid[best_idx + 1]
                                                 : alpha_grid[best_idx] * 2.0;
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = sup_objective(l, p, k, x1);
    double f2 = sup_objective(l, p, k, x2);
    double best_alpha = alpha_grid[best_idx];
    for (int iter = 0; iter < 10; ++iter) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = sup_objective(l, p, k, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = sup_objective(l, p, k, x2);
        }
    }
    const double refined = f1 >= f2 ? f1 : f2;
    const double refined_alpha = f1 >= f2 ? x1 : x2;
    if (refined > best_value) {
        best_value = refined;
        best_alpha = refined_alpha;
    }
    return ConnectivityReport{p, ConnectivityMethod::DiagonalShiftSup, k,
                              best_alpha, std::max(best_value, 0.0)};
}

std::vector<double> default_alpha_grid() {
    return {0.05, 0.1, 0.2, 0.5, 1.0, 2.0};
}

TauComparison tau_comparison(const Graph& g) {
    const int t1 = tau1_laplacian(g);
    const int ti = tau_inf_laplacian(g);
    return TauComparison{t1, ti, t1 <= ti};
}

}  // namespace ergo
