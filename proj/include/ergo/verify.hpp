#pragma once

#include <string>
#include <vector>

#include "ergo/graph.hpp"
#include "ergo/matrix.hpp"

namespace ergo {

/// One checked value from the worked-example regression suite.
struct PaperCheck {
    std::string group;
    std::string quantity;
    double expected;
    double actual;
    double tolerance;
    bool pass;
};

/// Evaluates every embedded worked example and compares against the
/// published values. `perturb` flips one fixture entry so the harness can
/// prove it reports mismatches.
std::vector<PaperCheck> run_paper_checks(bool perturb = false);

/// Embedded example matrices and graphs, reused by the test suites.
namespace fixtures {

Matrix example_2_2_a();
Matrix example_2_2_b();
Matrix example_2_3_a();
Matrix example_2_9_circulant();
Matrix example_2_14_a();
Matrix example_2_17_b();
Matrix corollary_2_13_a();
Graph example_4_1_graph();
Matrix example_4_1_laplacian();
Graph example_4_2_graph();
Matrix example_4_2_laplacian();
Graph example_4_5_graph();
Matrix example_4_5_laplacian();
Graph remark_4_4_graph();

}  // namespace fixtures

}  // namespace ergo
