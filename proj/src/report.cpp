#include "ergo/report.hpp"

#include <cmath>
#include <cstdio>

#include "ergo/bounds.hpp"
#include "ergo/coefficients.hpp"
#include "ergo/spectrum.hpp"

namespace ergo {

using nlohmann::ordered_json;

PChoice parse_p_choice(const std::string& text) {
    if (text == "1") return PChoice::One;
    if (text == "inf") return PChoice::Inf;
    if (text == "both") return PChoice::Both;
    throw ParseError("p must be one of: 1, inf, both");
}

std::vector<PNorm> selected_norms(PChoice pc) {
    switch (pc) {
        case PChoice::One: return {PNorm::One};
        case PChoice::Inf: return {PNorm::Infinity};
        default: return {PNorm::One, PNorm::Infinity};
    }
}

double canonical(double v) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

namespace {

const char* norm_name(PNorm p) { return p == PNorm::One ? "1" : "inf"; }

const char* pchoice_name(PChoice pc) {
    switch (pc) {
        case PChoice::One: return "1";
        case PChoice::Inf: return "inf";
        default: return "both";
    }
}

ordered_json report_shell(const std::string& descriptor, const std::string& command,
                          PChoice pc) {
    ordered_json report;
    report["input"] = descriptor;
    report["command"] = command;
    report["p"] = pchoice_name(pc);
    report["results"] = ordered_json::object();
    report["warnings"] = ordered_json::array();
    return report;
}

ordered_json sequence_json(const BoundSequence& seq) {
    ordered_json arr = ordered_json::array();
    for (const auto& [k, bound] : seq.entries)
        arr.push_back({{"k", k}, {"bound", canonical(bound)}});
    return arr;
}

void append_oracle(ordered_json& results, const EMatrix& e) {
    const auto [lo, hi] = nontrivial_extremes(e);
    results["oracle"] = {{"smallest_nontrivial_modulus", canonical(lo)},
                         {"largest_nontrivial_modulus", canonical(hi)}};
}

}  // namespace

ordered_json tau_report(const Matrix& m, const std::string& descriptor, PChoice pc) {
    ordered_json report = report_shell(descriptor, "tau", pc);
    ordered_json& results = report["results"];
    results["n"] = m.size();
    for (PNorm p : selected_norms(pc))
        results[std::string("tau_") + norm_name(p)] = canonical(tau(m, p));
    try {
        const EMatrix e = validate_ematrix(m);
        results["trivial_eigenvalue"] = canonical(e.trivial_eigenvalue());
        ordered_json certs = ordered_json::array();
        for (PNorm p : selected_norms(pc)) {
            const SimplicityReport r = simplicity_check(e, p);
            certs.push_back({{"p", norm_name(p)},
                             {"tau", canonical(r.tau_value)},
                             {"certified_simple", r.is_certified_simple},
                             {"gap_lower_bound", canonical(r.gap_lower_bound)}});
        }
        results["simplicity"] = certs;
    } catch (const NotConstantRowSum& e) {
        report["warnings"].push_back(
            std::string("not an e-matrix; coefficient formulas evaluated anyway: ") +
            e.what());
    }
    return report;
}

ordered_json bounds_report(const Matrix& m, const std::string& descriptor,
                           const BoundsOptions& opts) {
    ordered_json report =
        report_shell(descriptor, opts.smallest ? "bounds-smallest" : "bounds-largest",
                     opts.p);
    ordered_json& results = report["results"];
    const EMatrix e = validate_ematrix(m);
    results["n"] = m.size();
    results["trivial_eigenvalue"] = canonical(e.trivial_eigenvalue());
    results["max_level"] = opts.max_level;
    results["rel_tol"] = canonical(opts.rel_tol);

    const double tol = std::max(e.row_sum_tolerance(), default_row_sum_tolerance(m));
    const bool singular_trivial = std::abs(e.trivial_eigenvalue()) <= tol;

    ordered_json per_norm = ordered_json::array();
    for (PNorm p : selected_norms(opts.p)) {
        ordered_json entry;
        entry["p"] = norm_name(p);
        if (!opts.smallest) {
            entry["sequence"] = sequence_json(doubling_bounds(e, p, opts.max_level));
            const LargestEstimate est =
                estimate_largest(e, p, opts.rel_tol, opts.max_level);
            entry["estimate"] = {{"value", canonical(est.estimate)},
                                 {"levels_used", est.levels_used},
                                 {"converged", est.converged}};
        } else {
            double alpha_used = 0.0;
            ordered_json seq = ordered_json::array();
            for (std::int64_t k = 1; k <= 4; k *= 2) {
                double bound;
                if (singular_trivial) {
                    alpha_used = opts.alpha.value_or(default_shift_alpha(e));
                    bound = smallest_bound_singular(e, p, k, alpha_used);
                } else {
                    bound = smallest_bound_nonsingular(e, p, k);
                }
                ordered_json rec = {{"k", k}, {"bound", canonical(bound)}};
                if (singular_trivial) rec["alpha"] = canonical(alpha_used);
                seq.push_back(rec);
            }
            entry["sequence"] = seq;
            const SmallestEstimate est =
                estimate_smallest(e, p, opts.rel_tol, opts.max_level, opts.alpha);
            entry["estimate"] = {{"value", canonical(est.estimate)},
                                 {"converged", est.converged}};
        }
        per_norm.push_back(entry);
    }
    results["bounds"] = per_norm;
    if (opts.smallest && singular_trivial)
        report["warnings"].push_back(
            "input is singular; assuming 0 is a simple eigenvalue (verified only "
            "for Laplacians of connected graphs)");
    if (opts.with_oracle) append_oracle(results, e);
    return report;
}

ordered_json graph_report(const Graph& g, const std::string& descriptor,
                          const GraphOptions& opts) {
    ordered_json report = report_shell(descriptor, "graph", opts.p);
    ordered_json& results = report["results"];
    const bool connected = is_connected(g);
    results["n"] = g.vertex_count();
    results["edges"] = g.edges().size();
    results["max_degree"] = g.max_degree();
    results["connected"] = connected;
    results["tau_1"] = tau1_laplacian(g);
    results["tau_inf"] = tau_inf_laplacian(g);
    if (!g.edges().empty()) results["das_bound"] = das_bound(g);

    ordered_json radius = ordered_json::array();
    for (PNorm p : selected_norms(opts.p)) {
        radius.push_back(
            {{"p", norm_name(p)},
             {"sequence", sequence_json(spectral_radius_bounds(g, p, opts.max_k))}});
    }
    results["spectral_radius_bounds"] = radius;

    if (connected && g.vertex_count() >= 2) {
        const EMatrix l = laplacian(g);
        const double alpha = opts.alpha.value_or(default_shift_alpha(l));
        const std::vector<double> grid =
            opts.alpha_grid.empty() ? default_alpha_grid() : opts.alpha_grid;
        ordered_json conn = ordered_json::array();
        for (PNorm p : selected_norms(opts.p)) {
            const ConnectivityReport shift =
                connectivity_lower_bound_shift(g, p, 1, alpha);
            const ConnectivityReport sup =
                connectivity_lower_bound_sup(g, p, 1, grid);
            conn.push_back(
                {{"p", norm_name(p)},
                 {"rank_one_shift",
                  {{"k", shift.k},
                   {"alpha", canonical(shift.alpha_used)},
                   {"lower_bound", canonical(shift.lower_bound)}}},
                 {"diagonal_shift_sup",
                  {{"k", sup.k},
                   {"alpha", canonical(sup.alpha_used)},
                   {"lower_bound", canonical(sup.lower_bound)}}}});
        }
        results["connectivity_lower_bounds"] = conn;
    } else if (!connected) {
        report["warnings"].push_back(
            "graph is disconnected; algebraic connectivity is 0 and the "
            "connectivity bounds are skipped");
    }
    if (opts.with_oracle && g.vertex_count() >= 2) {
        const std::vector<double> eig = jacobi_eigenvalues(laplacian(g).matrix());
        results["oracle"] = {{"algebraic_connectivity", canonical(eig[1])},
                             {"spectral_radius", canonical(eig.back())}};
    }
    return report;
}

ordered_json probe_report(const Matrix& m, const std::string& descriptor,
                          PChoice pc, int max_k) {
    ordered_json report = report_shell(descriptor, "probe", pc);
    ordered_json& results = report["results"];
    const EMatrix e = validate_ematrix(m);
    results["n"] = m.size();
    results["trivial_eigenvalue"] = canonical(e.trivial_eigenvalue());
    ordered_json per_norm = ordered_json::array();
    for (PNorm p : selected_norms(pc)) {
        const ConstancyProbe probe = constancy_probe(e, p, max_k);
        ordered_json values = ordered_json::array();
        for (const auto& [k, v] : probe.values)
            values.push_back({{"k", k}, {"tau", canonical(v)}});
        per_norm.push_back({{"p", norm_name(p)},
                            {"values", values},
                            {"constant_all", probe.constant_all},
                            {"first_two_equal", probe.first_two_equal}});
    }
    results["probe"] = per_norm;
    return report;
}

namespace {

void print_node(const ordered_json& node, const std::string& prefix,
                std::ostream& os) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            const std::string path = prefix.empty() ? key : prefix + "." + key;
            print_node(value, path, os);
        }
    } else if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i)
            print_node(node[i], prefix + "[" + std::to_string(i) + "]", os);
    } else if (node.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", node.get<double>());
        os << prefix << " = " << buf << "\n";
    } else {
        os << prefix << " = " << node.dump() << "\n";
    }
}

}  // namespace

void print_report(const ordered_json& report, std::ostream& os) {
    print_node(report, "", os);
}

}  // namespace ergo
