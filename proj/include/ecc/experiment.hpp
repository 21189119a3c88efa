#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ecc/assignment.hpp"

namespace ecc {

/// Sweep description. Budgets are absolute for the local variant, multiples
/// of |V| for global, and fractions of |V| for robust, both resolved by
/// rounding down once the dataset is loaded.
struct ExperimentConfig {
    std::vector<std::string> datasets;
    std::vector<VariantKind> variants;
    std::vector<std::string> algorithms;  // greedy | lp-round | exact
    std::vector<long long> local_budgets;
    std::vector<double> global_budgets_per_node;
    std::vector<double> robust_budget_fractions;
    std::vector<double> rho = {0.5};
    std::vector<double> delta = {0.5};
    std::vector<double> eps = {1.0 / 3.0};
    int threads = 0;  // 0 keeps the OpenMP default
};

ExperimentConfig load_config(const std::string& path);
ExperimentConfig config_from_json_text(const std::string& text);

struct ExperimentRow {
    std::string dataset;
    VariantKind variant = VariantKind::LocalOverlap;
    std::string algorithm;
    long long b = 0;
    std::string param;  // e.g. rho=0.5, empty for greedy/exact
    double lp_value = 0.0;
    long long mistakes = 0;
    double alpha = 0.0;
    long long budget_used = 0;
    double beta = 0.0;
    long long satisfied = 0;
    double satisfied_pct_of_bound = 0.0;
    long long unused_nodes = 0;
    double runtime_ms = 0.0;
    bool ok = true;
    std::string error;
};

/// mistakes over the LP lower bound; 1 when both are ~0, inf when only the
/// bound is ~0.
double measure_alpha(double mistakes, double lp_value);

/// Budget violation factor: usage over b, where usage is in the variant's
/// own units (max per-node colors for local). b = 0 with no usage counts
/// as 1.
double measure_beta(VariantKind kind, long long usage, long long b);

/// One row per (dataset, variant, algorithm, budget, parameter), evaluated
/// in config order. Rows are independent and run in parallel; LP solutions
/// are shared between algorithms of the same (dataset, variant, budget).
/// Failed rows carry ok = false and are kept out of the CSV.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

struct SummaryRow {
    std::string dataset;
    VariantKind variant = VariantKind::LocalOverlap;
    std::string algorithm;
    double max_alpha = 0.0;
    double max_beta = 0.0;
};

/// Worst alpha and beta per (dataset, variant, algorithm) across budgets.
std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows);

void write_summary(std::ostream& out, const std::vector<SummaryRow>& summary);

/// Ratio formatting used in both CSV writers: three decimals, rounded up,
/// infinity as the literal `inf`.
std::string format_ratio(double x);

}  // namespace ecc
