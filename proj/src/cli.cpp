#include "ecc/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ecc/evaluate.hpp"
#include "ecc/exact.hpp"
#include "ecc/experiment.hpp"
#include "ecc/greedy.hpp"
#include "ecc/io.hpp"
#include "ecc/lp_model.hpp"
#include "ecc/rounding.hpp"

namespace ecc::cli {

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitGuard = 4;

int log_level() {
    const char* env = std::getenv("ECC_LOG");
    return env ? std::atoi(env) : 0;
}

VariantKind parse_variant(const std::string& name) {
    if (name == "local") return VariantKind::LocalOverlap;
    if (name == "global") return VariantKind::GlobalOverlap;
    if (name == "robust") return VariantKind::Robust;
    throw CLI::ValidationError("--variant", "must be local, global, or robust");
}

nlohmann::ordered_json json_ratio(double x) {
    if (std::isinf(x)) return "inf";
    return x;
}

struct SolveArgs {
    std::string variant, algo, fill = "default", file, trace_path;
    long long budget = 0;
    double rho = 0.5, delta = 0.5, eps = 1.0 / 3.0;
};

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    const VariantKind kind = parse_variant(args.variant);
    const Variant variant{kind, args.budget};
    if (!variant.valid())
        throw CLI::ValidationError("--budget", kind == VariantKind::LocalOverlap
                                                   ? "local budget must be >= 1"
                                                   : "budget must be >= 0");
    const EdgeColoredHypergraph h = read_hypergraph_file(args.file);

    ColorAssignment assignment;
    nlohmann::ordered_json extra;
    GreedyTrace trace;
    bool have_trace = false;

    if (args.algo == "greedy") {
        GreedyResult g = kind == VariantKind::LocalOverlap    ? greedy_local(h, args.budget)
                         : kind == VariantKind::GlobalOverlap ? greedy_global(h, args.budget)
                                                              : greedy_robust(h, args.budget);
        assignment = std::move(g.assignment);
        trace = std::move(g.trace);
        have_trace = true;
    } else if (args.algo == "lp-round") {
        const LpSolution sol = solve_lp(build_lp(h, variant));
        if (sol.status != SolveStatus::Optimal)
            throw std::runtime_error(std::string("LP solve failed: ") +
                                     status_name(sol.status));
        if (log_level() >= 1)
            err << "lp objective " << sol.objective << " after " << sol.iterations
                << " iterations\n";
        const bool fill = args.fill == "default" ? kind != VariantKind::LocalOverlap
                                                 : args.fill == "on";
        RoundingResult r = kind == VariantKind::LocalOverlap
                               ? round_local(h, args.budget, sol, args.rho, fill)
                           : kind == VariantKind::GlobalOverlap
                               ? round_global(h, args.budget, sol, args.delta, fill)
                               : round_robust(h, args.budget, sol, args.eps, fill);
        assignment = std::move(r.assignment);
        extra["lp_value"] = r.certificate.lp_value;
        extra["promised_alpha"] = json_ratio(r.certificate.promised_alpha);
        extra["observed_alpha"] = json_ratio(r.certificate.observed_alpha);
        extra["promised_beta"] = json_ratio(r.certificate.promised_beta);
        extra["observed_beta"] = json_ratio(r.certificate.observed_beta);
    } else if (args.algo == "exact") {
        assignment = solve_via_decision(h, variant).witness;
    } else {
        throw CLI::ValidationError("--algo", "must be greedy, lp-round, or exact");
    }

    const EvaluationReport report = evaluate(h, assignment, variant);
    nlohmann::ordered_json j = assignment_json(variant, assignment, report);
    for (auto& [key, value] : extra.items()) j[key] = value;
    out << j.dump(2) << '\n';

    if (!args.trace_path.empty()) {
        if (!have_trace) throw std::runtime_error("--trace requires --algo greedy");
        std::ofstream tf(args.trace_path);
        if (!tf) throw std::runtime_error("cannot write '" + args.trace_path + "'");
        write_trace_csv(tf, trace);
    }
    return kExitYes;
}

int run_decide(const std::string& variant_name_, long long budget, long long t, bool use_kernel,
               const std::string& file, std::ostream& out) {
    const VariantKind kind = parse_variant(variant_name_);
    const Variant variant{kind, budget};
    if (!variant.valid()) throw CLI::ValidationError("--budget", "invalid for variant");
    const EdgeColoredHypergraph h = read_hypergraph_file(file);

    const DecisionResult res =
        use_kernel ? decide_kernelized(h, variant, t) : decide_branching(h, variant, t);

    nlohmann::ordered_json j;
    j["answer"] = res.yes;
    j["variant"] = variant_name(kind);
    j["budget"] = budget;
    j["mistakes_allowed"] = t;
    if (res.yes) {
        j["deleted_edges"] = res.deleted_edges;
        nlohmann::ordered_json colors = nlohmann::ordered_json::object();
        for (NodeId v = 1; v <= h.num_nodes(); ++v)
            if (!res.witness.is_deleted(v)) colors[std::to_string(v)] = res.witness.colors[v];
        j["colors"] = std::move(colors);
        j["deleted"] = res.witness.deleted;
    }
    out << j.dump(2) << '\n';
    return res.yes ? kExitYes : kExitNo;
}

int run_lp(const std::string& variant_name_, long long budget, const std::string& dump_path,
           const std::string& file, std::ostream& out, std::ostream& err) {
    const VariantKind kind = parse_variant(variant_name_);
    const Variant variant{kind, budget};
    if (!variant.valid()) throw CLI::ValidationError("--budget", "invalid for variant");
    const EdgeColoredHypergraph h = read_hypergraph_file(file);
    const LpModel model = build_lp(h, variant);
    if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        if (!dump) throw std::runtime_error("cannot write '" + dump_path + "'");
        write_lp_format(dump, model);
    }
    const LpSolution sol = solve_lp(model);
    if (sol.status != SolveStatus::Optimal)
        throw std::runtime_error(std::string("LP solve failed: ") + status_name(sol.status));
    if (log_level() >= 1)
        err << sol.iterations << " simplex iterations, " << model.num_vars() << " variables, "
            << model.num_rows() << " rows\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", std::max(0.0, sol.objective));
    out << buf << '\n';
    return kExitYes;
}

int run_stats(const std::string& file, std::ostream& out) {
    const EdgeColoredHypergraph h = read_hypergraph_file(file);
    const StructureStats s = structure_stats(h);
    nlohmann::ordered_json j;
    j["nodes"] = h.num_nodes();
    j["edges"] = h.num_edges();
    j["colors"] = h.num_colors();
    j["rank"] = h.rank();
    j["mean_edge_size"] = s.mean_edge_size;
    j["max_chromatic_degree"] = s.max_chromatic_degree;
    j["mean_chromatic_degree"] = s.mean_chromatic_degree;
    j["max_non_dominant_degree"] = s.max_non_dominant;
    j["mean_non_dominant_degree"] = s.mean_non_dominant;
    j["median_non_dominant_degree"] = s.median_non_dominant;
    j["frac_chromatic_gt1"] = s.frac_chromatic_gt1;
    j["frac_nd_pct_ge_5"] = s.frac_nd_pct_ge_5;
    j["frac_nd_pct_ge_10"] = s.frac_nd_pct_ge_10;
    out << j.dump(2) << '\n';
    return kExitYes;
}

int run_experiment_cmd(const std::string& config_path, const std::string& out_path,
                       std::ostream& out, std::ostream& err) {
    const ExperimentConfig config = load_config(config_path);
    const auto rows = run_experiment(config);
    std::ofstream csv(out_path);
    if (!csv) throw std::runtime_error("cannot write '" + out_path + "'");
    write_csv(csv, rows);
    long long failures = 0;
    for (const auto& row : rows)
        if (!row.ok) {
            ++failures;
            err << "row failed: " << row.dataset << ' ' << variant_name(row.variant) << ' '
                << row.algorithm << " b=" << row.b << ": " << row.error << '\n';
        }
    write_summary(out, summarize(rows));
    if (failures) err << failures << " of " << rows.size() << " rows failed\n";
    return kExitYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"budgeted edge-colored clustering of hypergraphs"};
    app.require_subcommand(1);
    long long seed = 0;
    app.add_option("--seed", seed, "reserved; all algorithms are deterministic");

    auto* stats = app.add_subcommand("stats", "structural statistics of an instance");
    std::string stats_file;
    stats->add_option("file", stats_file, "hypergraph file")->required();

    auto* solve = app.add_subcommand("solve", "run one algorithm and print the assignment");
    SolveArgs sa;
    solve->add_option("--variant", sa.variant, "local | global | robust")->required();
    solve->add_option("--algo", sa.algo, "greedy | lp-round | exact")->required();
    solve->add_option("--budget", sa.budget, "variant budget b")->required();
    solve->add_option("--rho", sa.rho, "local rounding threshold in (0,1)");
    solve->add_option("--delta", sa.delta, "global rounding threshold in (0,1)");
    solve->add_option("--eps", sa.eps, "robust rounding threshold in (0,1/2)");
    solve->add_option("--fill", sa.fill, "fill empty nodes with their favorite color (on|off)")
        ->check(CLI::IsMember({"on", "off", "default"}));
    solve->add_option("--trace", sa.trace_path, "write the greedy trace CSV here");
    solve->add_option("file", sa.file, "hypergraph file")->required();

    auto* decide = app.add_subcommand("decide", "decision version: <= t mistakes within budget?");
    std::string d_variant, d_file;
    long long d_budget = 0, d_t = 0;
    bool d_kernelize = false;
    decide->add_option("--variant", d_variant)->required();
    decide->add_option("--budget", d_budget)->required();
    decide->add_option("--mistakes", d_t, "allowed mistakes t")->required();
    decide->add_flag("--kernelize", d_kernelize, "shrink by easy-node removal first");
    decide->add_option("file", d_file)->required();

    auto* lp = app.add_subcommand("lp", "print the LP lower bound");
    std::string l_variant, l_file, l_dump;
    long long l_budget = 0;
    lp->add_option("--variant", l_variant)->required();
    lp->add_option("--budget", l_budget)->required();
    lp->add_option("--dump-lp", l_dump, "write the model in LP text format");
    lp->add_option("file", l_file)->required();

    auto* experiment = app.add_subcommand("experiment", "run a sweep from a JSON config");
    std::string e_config, e_out;
    experiment->add_option("--config", e_config)->required();
    experiment->add_option("--out", e_out, "CSV output path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*stats) return run_stats(stats_file, out);
        if (*solve) return run_solve(sa, out, err);
        if (*decide) return run_decide(d_variant, d_budget, d_t, d_kernelize, d_file, out);
        if (*lp) return run_lp(l_variant, l_budget, l_dump, l_file, out, err);
        if (*experiment) return run_experiment_cmd(e_config, e_out, out, err);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const GuardExceeded& e) {
        err << "guard violation: " << e.what() << '\n';
        return kExitGuard;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InvalidInstance& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::runtime_error& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 70;
    }
    return kExitUsage;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace ecc::cli
