#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ergo/graph.hpp"
#include "ergo/matrix.hpp"

namespace ergo {

enum class PChoice { One, Inf, Both };

PChoice parse_p_choice(const std::string& text);
std::vector<PNorm> selected_norms(PChoice pc);

/// Rounds to 12 significant digits so emitted JSON is canonical.
double canonical(double v);

nlohmann::ordered_json tau_report(const Matrix& m, const std::string& descriptor,
                                  PChoice pc);

struct BoundsOptions {
    PChoice p = PChoice::Both;
    bool smallest = false;
    int max_level = 20;
    double rel_tol = 1e-4;
    std::optional<double> alpha;
    bool with_oracle = false;
};

nlohmann::ordered_json bounds_report(const Matrix& m, const std::string& descriptor,
                                     const BoundsOptions& opts);

struct GraphOptions {
    PChoice p = PChoice::Both;
    int max_k = 3;
    std::optional<double> alpha;
    std::vector<double> alpha_grid;  // empty selects the default grid
    bool with_oracle = false;
};

nlohmann::ordered_json graph_report(const Graph& g, const std::string& descriptor,
                                    const GraphOptions& opts);

nlohmann::ordered_json probe_report(const Matrix& m, const std::string& descriptor,
                                    PChoice pc, int max_k);

/// Flat human-readable rendering of a report.
void print_report(const nlohmann::ordered_json& report, std::ostream& os);

}  // namespace ergo
