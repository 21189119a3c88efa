#include "ecc/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

#include "ecc/evaluate.hpp"
#include "ecc/exact.hpp"
#include "ecc/greedy.hpp"
#include "ecc/io.hpp"
#include "ecc/lp_model.hpp"
#include "ecc/rounding.hpp"

namespace ecc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

VariantKind parse_variant(const std::string& s) {
    if (s == "local") return VariantKind::LocalOverlap;
    if (s == "global") return VariantKind::GlobalOverlap;
    if (s == "robust") return VariantKind::Robust;
    throw std::runtime_error("unknown variant '" + s + "'");
}

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

std::string format_param(const char* name, double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%s=%g", name, value);
    return buf;
}

}  // namespace

ExperimentConfig config_from_json_text(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ExperimentConfig cfg;
    cfg.datasets = j.at("datasets").get<std::vector<std::string>>();
    for (const auto& v : j.at("variants")) cfg.variants.push_back(parse_variant(v));
    cfg.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    if (j.contains("local_budgets"))
        cfg.local_budgets = j["local_budgets"].get<std::vector<long long>>();
    if (j.contains("global_budgets_per_node"))
        cfg.global_budgets_per_node = j["global_budgets_per_node"].get<std::vector<double>>();
    if (j.contains("robust_budget_fractions"))
        cfg.robust_budget_fractions = j["robust_budget_fractions"].get<std::vector<double>>();
    if (j.contains("rho")) cfg.rho = j["rho"].get<std::vector<double>>();
    if (j.contains("delta")) cfg.delta = j["delta"].get<std::vector<double>>();
    if (j.contains("eps")) cfg.eps = j["eps"].get<std::vector<double>>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();

    for (const std::string& algo : cfg.algorithms)
        if (algo != "greedy" && algo != "lp-round" && algo != "exact")
            throw std::runtime_error("unknown algorithm '" + algo + "'");
    for (VariantKind kind : cfg.variants) {
        const bool empty = kind == VariantKind::LocalOverlap ? cfg.local_budgets.empty()
                           : kind == VariantKind::GlobalOverlap
                               ? cfg.global_budgets_per_node.empty()
                               : cfg.robust_budget_fractions.empty();
        if (empty)
            throw std::runtime_error(std::string("no budget grid for variant '") +
                                     variant_name(kind) + "'");
    }
    for (double f : cfg.robust_budget_fractions)
        if (f < 0.0 || f > 1.0) throw std::runtime_error("robust budget fraction outside [0,1]");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return config_from_json_text(buffer.str());
}

double measure_alpha(double mistakes, double lp_value) {
    constexpr double tol = 1e-6;
    if (lp_value <= tol) return mistakes <= tol ? 1.0 : kInf;
    return mistakes / lp_value;
}

double measure_beta(VariantKind kind, long long usage, long long b) {
    (void)kind;  // usage is already in the variant's units
    if (b == 0) return usage == 0 ? 1.0 : kInf;
    return static_cast<double>(usage) / static_cast<double>(b);
}

namespace {

struct Task {
    int dataset = 0;
    VariantKind kind = VariantKind::LocalOverlap;
    std::string algorithm;
    long long b = 0;
    double param = 0.0;  // rho/delta/eps for lp-round
    const char* param_name = "";
};

struct LpCacheEntry {
    LpSolution solution;
    double solve_ms = 0.0;
    std::string error;
};

std::vector<long long> resolved_budgets(const ExperimentConfig& cfg, VariantKind kind, int n) {
    std::vector<long long> out;
    switch (kind) {
        case VariantKind::LocalOverlap:
            out = cfg.local_budgets;
            break;
        case VariantKind::GlobalOverlap:
            for (double mult : cfg.global_budgets_per_node)
                out.push_back(static_cast<long long>(std::floor(mult * n + 1e-9)));
            break;
        case VariantKind::Robust:
            for (double frac : cfg.robust_budget_fractions)
                out.push_back(static_cast<long long>(std::floor(frac * n + 1e-9)));
            break;
    }
    return out;
}

ExperimentRow run_task(const Task& task, const std::string& dataset_name,
                       const EdgeColoredHypergraph& h, const LpCacheEntry& lp) {
    ExperimentRow row;
    row.dataset = dataset_name;
    row.variant = task.kind;
    row.algorithm = task.algorithm;
    row.b = task.b;
    if (task.algorithm == "lp-round") row.param = format_param(task.param_name, task.param);

    if (!lp.error.empty()) {
        row.ok = false;
        row.error = lp.error;
        return row;
    }
    row.lp_value = std::max(0.0, lp.solution.objective);

    const Variant variant{task.kind, task.b};
    ColorAssignment assignment;
    EvaluationReport report;
    const double start = now_ms();
    try {
        if (task.algorithm == "greedy") {
            GreedyResult g = task.kind == VariantKind::LocalOverlap ? greedy_local(h, task.b)
                             : task.kind == VariantKind::GlobalOverlap
                                 ? greedy_global(h, task.b)
                                 : greedy_robust(h, task.b);
            assignment = std::move(g.assignment);
            report = evaluate(h, assignment, variant);
        } else if (task.algorithm == "lp-round") {
            RoundingResult r = task.kind == VariantKind::LocalOverlap
                                   ? round_local(h, task.b, lp.solution, task.param)
                               : task.kind == VariantKind::GlobalOverlap
                                   ? round_global(h, task.b, lp.solution, task.param)
                                   : round_robust(h, task.b, lp.solution, task.param);
            assignment = std::move(r.assignment);
            report = r.report;
        } else {  // exact
            DecisionResult d = solve_via_decision(h, variant);
            assignment = std::move(d.witness);
            report = evaluate(h, assignment, variant);
        }
    } catch (const std::exception& err) {
        row.ok = false;
        row.error = err.what();
        return row;
    }
    row.runtime_ms = (now_ms() - start) + (task.algorithm == "greedy" ? 0.0 : lp.solve_ms);

    row.mistakes = report.mistakes;
    row.satisfied = report.satisfied;
    row.unused_nodes = report.unused_nodes;
    row.budget_used = report.budget_used;
    row.alpha = measure_alpha(static_cast<double>(report.mistakes), row.lp_value);
    row.beta = measure_beta(task.kind, report.budget_used, task.b);
    const double bound = static_cast<double>(h.num_edges()) - row.lp_value;
    row.satisfied_pct_of_bound =
        bound > 1e-9 ? static_cast<double>(report.satisfied) / bound : 1.0;
    return row;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
#ifdef _OPENMP
    if (config.threads > 0) omp_set_num_threads(config.threads);
#endif

    std::vector<EdgeColoredHypergraph> graphs(config.datasets.size());
    std::vector<std::string> load_errors(config.datasets.size());
    for (size_t d = 0; d < config.datasets.size(); ++d) {
        try {
            graphs[d] = read_hypergraph_file(config.datasets[d]);
        } catch (const std::exception& err) {
            load_errors[d] = err.what();
        }
    }

    // enumerate rows in config order
    std::vector<Task> tasks;
    for (size_t d = 0; d < config.datasets.size(); ++d) {
        for (VariantKind kind : config.variants) {
            const auto budgets = resolved_budgets(config, kind, graphs[d].num_nodes());
            for (const std::string& algo : config.algorithms) {
                for (long long b : budgets) {
                    if (kind == VariantKind::LocalOverlap && b < 1) continue;
                    if (algo != "lp-round") {
                        tasks.push_back({static_cast<int>(d), kind, algo, b, 0.0, ""});
                        continue;
                    }
                    const auto& params = kind == VariantKind::LocalOverlap ? config.rho
                                         : kind == VariantKind::GlobalOverlap ? config.delta
                                                                              : config.eps;
                    const char* name = kind == VariantKind::LocalOverlap ? "rho"
                                       : kind == VariantKind::GlobalOverlap ? "delta"
                                                                            : "eps";
                    for (double p : params)
                        tasks.push_back({static_cast<int>(d), kind, algo, b, p, name});
                }
            }
        }
    }

    // solve each distinct relaxation once, shared across algorithm rows
    std::map<std::tuple<int, VariantKind, long long>, LpCacheEntry> lp_cache;
    for (const Task& t : tasks) lp_cache.emplace(std::make_tuple(t.dataset, t.kind, t.b),
                                                 LpCacheEntry{});
    std::vector<std::pair<const std::tuple<int, VariantKind, long long>, LpCacheEntry>*>
        cache_items;
    for (auto& item : lp_cache) cache_items.push_back(&item);

#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < cache_items.size(); ++i) {
        const auto& [dataset, kind, b] = cache_items[i]->first;
        LpCacheEntry& entry = cache_items[i]->second;
        if (!load_errors[dataset].empty()) {
            entry.error = load_errors[dataset];
            continue;
        }
        const double start = now_ms();
        try {
            entry.solution = solve_lp(build_lp(graphs[dataset], Variant{kind, b}));
            if (entry.solution.status != SolveStatus::Optimal)
                entry.error = std::string("LP status ") + status_name(entry.solution.status);
        } catch (const std::exception& err) {
            entry.error = err.what();
        }
        entry.solve_ms = now_ms() - start;
    }

    std::vector<ExperimentRow> rows(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < tasks.size(); ++i) {
        const Task& task = tasks[i];
        const auto& lp = lp_cache.at(std::make_tuple(task.dataset, task.kind, task.b));
        rows[i] = run_task(task, config.datasets[task.dataset], graphs[task.dataset], lp);
    }
    return rows;
}

std::string format_ratio(double x) {
    if (std::isinf(x)) return "inf";
    const double up = std::ceil(x * 1000.0 - 1e-7) / 1000.0;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", up);
    return buf;
}

namespace {

std::string format_fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
    return buf;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    out << "dataset,variant,algorithm,b,param,lp_value,mistakes,alpha,budget_used,beta,"
           "satisfied,satisfied_pct_of_bound,unused_nodes,runtime_ms\n";
    for (const ExperimentRow& row : rows) {
        if (!row.ok) continue;
        out << row.dataset << ',' << variant_name(row.variant) << ',' << row.algorithm << ','
            << row.b << ',' << row.param << ',' << format_fixed(row.lp_value, 6) << ','
            << row.mistakes << ',' << format_ratio(row.alpha) << ',' << row.budget_used << ','
            << format_ratio(row.beta) << ',' << row.satisfied << ','
            << format_fixed(row.satisfied_pct_of_bound, 6) << ',' << row.unused_nodes << ','
            << format_fixed(row.runtime_ms, 3) << '\n';
    }
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows) {
    std::vector<SummaryRow> summary;
    auto find = [&](const ExperimentRow& row) -> SummaryRow& {
        for (SummaryRow& s : summary)
            if (s.dataset == row.dataset && s.variant == row.variant &&
                s.algorithm == row.algorithm)
                return s;
        summary.push_back({row.dataset, row.variant, row.algorithm, 0.0, 0.0});
        return summary.back();
    };
    for (const ExperimentRow& row : rows) {
        if (!row.ok) continue;
        SummaryRow& s = find(row);
        s.max_alpha = std::max(s.max_alpha, row.alpha);
        s.max_beta = std::max(s.max_beta, row.beta);
    }
    return summary;
}

void write_summary(std::ostream& out, const std::vector<SummaryRow>& summary) {
    out << "dataset,variant,algorithm,max_alpha,max_beta\n";
    for (const SummaryRow& s : summary)
        out << s.dataset << ',' << variant_name(s.variant) << ',' << s.algorithm << ','
            << format_ratio(s.max_alpha) << ',' << format_ratio(s.max_beta) << '\n';
}

}  // namespace ecc
