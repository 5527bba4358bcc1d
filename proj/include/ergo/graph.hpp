#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ergo/bounds.hpp"
#include "ergo/matrix.hpp"

namespace ergo {

/// Simple undirected graph: vertex count plus a set of edges, 0-based.
class Graph {
public:
    Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t vertex_count() const { return n_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
        return edges_;
    }
    std::size_t degree(std::size_t v) const { return neighbors_[v].size(); }
    std::size_t max_degree() const;
    const std::vector<std::size_t>& neighbors(std::size_t v) const {
        return neighbors_[v];
    }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v]; }

private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> neighbors_;
    std::vector<char> adj_;
};

/// L = D - A, a singular symmetric e-matrix with trivial eigenvalue 0.
EMatrix laplacian(const Graph& g);

bool is_connected(const Graph& g);

/// Closed form for tau_1 of the Laplacian:
/// max over vertex pairs of d_i + d_j - |N_i intersect N_j|.
int tau1_laplacian(const Graph& g);

/// Closed form for tau_inf of the Laplacian: n when the max degree d
/// satisfies 2d >= n, otherwise 2d.
int tau_inf_laplacian(const Graph& g);

/// Literature bound on the largest Laplacian eigenvalue: the tau_1 pair
/// statistic maximized over edges only.
int das_bound(const Graph& g);

BoundSequence spectral_radius_bounds(const Graph& g, PNorm p, int max_k);

enum class ConnectivityMethod { RankOneShift, DiagonalShiftSup };

struct ConnectivityReport {
    PNorm p;
    ConnectivityMethod method;
    std::int64_t k;
    double alpha_used;
    double lower_bound;
};

/// Algebraic connectivity lower bound via 1/tau_p((L + alpha*J)^-k)^(1/k).
ConnectivityReport connectivity_lower_bound_shift(const Graph& g, PNorm p,
                                                 std::int64_t k, double alpha);

/// Algebraic connectivity lower bound via the sup over alpha > 0 of
/// 1/tau_p((L + alpha*I)^-k)^(1/k) - alpha, evaluated on a grid and
/// refined by golden-section search around the best grid point.
ConnectivityReport connectivity_lower_bound_sup(const Graph& g, PNorm p,
                                                std::int64_t k,
                                                std::span<const double> alpha_grid);

std::vector<double> default_alpha_grid();

struct TauComparison {
    int tau1;
    int tau_inf;
    bool ordered;
};

TauComparison tau_comparison(const Graph& g);

}  // namespace ergo
