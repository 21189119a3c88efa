#pragma once

#include "ecc/assignment.hpp"
#include "ecc/evaluate.hpp"
#include "ecc/hypergraph.hpp"
#include "ecc/lp_model.hpp"

namespace ecc {

/// Bicriteria promise of a rounding scheme together with what the rounded
/// assignment actually achieved. observed_alpha is mistakes over the LP
/// value (1 when both are ~0), observed_beta is budget usage over b (1 when
/// b = 0 and nothing was spent). Construction fails with std::logic_error
/// if an observed value exceeds its promise.
struct GuaranteeCertificate {
    double promised_alpha = 0.0;
    double promised_beta = 0.0;
    double observed_alpha = 0.0;
    double observed_beta = 0.0;
    double lp_value = 0.0;
    long long mistakes = 0;
    long long budget_used = 0;
};

struct RoundingResult {
    ColorAssignment assignment;
    GuaranteeCertificate certificate;
    EvaluationReport report;
};

/// Nearest-integer rounding with a split point: floor(x) when the
/// fractional part is below delta, ceil(x) otherwise.
long long round_half(double x, double delta);

/// Thresholds a local-overlap LP solution: v gets color c when x_v^c falls
/// below 1 - rho. Promises ((1/(1-rho)), (ceil(b/rho)-1)/b); the preset
/// rho = b/(b+1) stays within budget on every node. fill adds the favorite
/// color to otherwise-empty nodes.
RoundingResult round_local(const EdgeColoredHypergraph& h, long long b, const LpSolution& sol,
                           double rho, bool fill = false);

/// Thresholds a global-overlap LP solution with the per-node threshold
/// (1-delta)/(round_half(y_v, delta)+2), then gives every empty node its
/// favorite color for free. Promises ((b+2)/(1-delta)+1, 1/delta).
RoundingResult round_global(const EdgeColoredHypergraph& h, long long b, const LpSolution& sol,
                            double delta, bool fill = true);

/// Rounds a robust LP solution: v is deleted when z_v >= eps, otherwise
/// keeps the (at most one) color with x_v^c below 1/2, with empty nodes
/// falling back to their favorite. Promises (2/(1-2eps), 1/eps).
RoundingResult round_robust(const EdgeColoredHypergraph& h, long long b, const LpSolution& sol,
                            double eps, bool fill = true);

/// Single-criteria threshold for round_local: b/(b+1).
double rho_single_criteria(long long b);

}  // namespace ecc
