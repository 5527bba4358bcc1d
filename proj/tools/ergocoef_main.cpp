#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ergo/io.hpp"
#include "ergo/report.hpp"
#include "ergo/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerifyMismatch = 3;

ergo::Matrix load_matrix(const std::string& path) {
    if (path == "-") return ergo::read_matrix(std::cin);
    return ergo::read_matrix_file(path);
}

ergo::Graph load_graph(const std::string& path, bool one_based) {
    if (path == "-") return ergo::read_edge_list(std::cin, one_based);
    return ergo::read_edge_list_file(path, one_based);
}

void emit(const nlohmann::ordered_json& report, bool json) {
    if (json)
        std::cout << report.dump(2) << "\n";
    else
        ergo::print_report(report, std::cout);
}

int run_verify_paper() {
    const std::vector<ergo::PaperCheck> checks = ergo::run_paper_checks();
    int mismatches = 0;
    std::string last_group;
    for (const auto& c : checks) {
        if (c.group != last_group) {
            std::printf("%s\n", c.group.c_str());
            last_group = c.group;
        }
        std::printf("  %-34s expected %10.4f  got %10.4f  %s\n", c.quantity.c_str(),
                    c.expected, c.actual, c.pass ? "ok" : "MISMATCH");
        if (!c.pass) ++mismatches;
    }
    std::printf("%zu checks, %d mismatches\n", checks.size(), mismatches);
    return mismatches == 0 ? kExitOk : kExitVerifyMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ergodicity coefficients and eigenvalue bounds for constant "
                 "row-sum matrices"};
    app.require_subcommand(1);

    std::string input;
    std::string p_flag = "both";
    bool json = false;
    bool oracle = false;
    bool one_based = false;
    int max_level = 20;
    int max_k = 10;
    int graph_k = 3;
    double rel_tol = 1e-4;
    double alpha = 0.0;
    bool alpha_set = false;
    std::vector<double> alpha_grid;
    std::string target = "largest";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input file, or - for stdin")->required();
        cmd->add_option("--p", p_flag, "norm selector: 1, inf, or both");
        cmd->add_flag("--json", json, "emit the report as JSON");
    };

    CLI::App* tau = app.add_subcommand("tau", "coefficients and gap certificate");
    add_common(tau);

    CLI::App* bounds = app.add_subcommand("bounds", "eigenvalue bound sequences");
    add_common(bounds);
    bounds->add_option("--target", target, "largest or smallest");
    bounds->add_option("--max-level", max_level, "doubling levels (k = 2^level)");
    bounds->add_option("--rel-tol", rel_tol, "convergence threshold");
    bounds->add_option("--alpha", alpha, "shift for singular input")
        ->each([&](const std::string&) { alpha_set = true; });
    bounds->add_flag("--oracle", oracle, "append reference eigenvalues");

    CLI::App* graph = app.add_subcommand("graph", "Laplacian analysis of an edge list");
    add_common(graph);
    graph->add_option("--k", graph_k, "max power for spectral radius bounds");
    graph->add_option("--alpha", alpha, "shift for the rank-one method")
        ->each([&](const std::string&) { alpha_set = true; });
    graph->add_option("--alpha-grid", alpha_grid, "grid for the sup method")
        ->delimiter(',');
    graph->add_flag("--one-based", one_based, "edge list uses 1-based vertex ids");
    graph->add_flag("--oracle", oracle, "append reference eigenvalues");

    CLI::App* probe = app.add_subcommand("probe", "raw tau_p(A^k) constancy probe");
    add_common(probe);
    probe->add_option("--max-k", max_k, "highest power probed");

    CLI::App* verify = app.add_subcommand("verify-paper",
                                          "regression over the worked examples");
    (void)verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        const ergo::PChoice pc = ergo::parse_p_choice(p_flag);
        if (tau->parsed()) {
            emit(ergo::tau_report(load_matrix(input), input, pc), json);
        } else if (bounds->parsed()) {
            if (target != "largest" && target != "smallest")
                throw ergo::ParseError("target must be largest or smallest");
            ergo::BoundsOptions opts;
            opts.p = pc;
            opts.smallest = target == "smallest";
            opts.max_level = max_level;
            opts.rel_tol = rel_tol;
            if (alpha_set) opts.alpha = alpha;
            opts.with_oracle = oracle;
            emit(ergo::bounds_report(load_matrix(input), input, opts), json);
        } else if (graph->parsed()) {
            ergo::GraphOptions opts;
            opts.p = pc;
            opts.max_k = graph_k;
            if (alpha_set) opts.alpha = alpha;
            opts.alpha_grid = alpha_grid;
            opts.with_oracle = oracle;
            emit(ergo::graph_report(load_graph(input, one_based), input, opts), json);
        } else if (probe->parsed()) {
            emit(ergo::probe_report(load_matrix(input), input, pc, max_k), json);
        } else {
            return run_verify_paper();
        }
    } catch (const ergo::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ergo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
