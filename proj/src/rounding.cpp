#include "ecc/rounding.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ecc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Thresholds in the theorems are strict inequalities on fractional values;
// the guard band keeps solver noise from flipping an assignment.
constexpr double kGuard = 1e-9;
constexpr double kZeroTol = 1e-6;

double observed_alpha(long long mistakes, double lp_value) {
    if (lp_value <= kZeroTol) return mistakes == 0 ? 1.0 : kInf;
    return static_cast<double>(mistakes) / lp_value;
}

double observed_beta(long long used, long long b) {
    if (b == 0) return used == 0 ? 1.0 : kInf;
    return static_cast<double>(used) / static_cast<double>(b);
}

void enforce(const GuaranteeCertificate& cert) {
    if (cert.observed_alpha > cert.promised_alpha + 1e-6 ||
        cert.observed_beta > cert.promised_beta + 1e-9)
        throw std::logic_error("rounding certificate violated: observed (" +
                               std::to_string(cert.observed_alpha) + ", " +
                               std::to_string(cert.observed_beta) + ") vs promised (" +
                               std::to_string(cert.promised_alpha) + ", " +
                               std::to_string(cert.promised_beta) + ")");
}

void fill_favorite(const EdgeColoredHypergraph& h, ColorAssignment& a) {
    for (NodeId v = 1; v <= h.num_nodes(); ++v) {
        if (!a.colors[v].empty() || a.is_deleted(v)) continue;
        const ColorId fav = h.favorite_color(v);
        a.colors[v].push_back(fav ? fav : 1);
    }
}

RoundingResult finish(const EdgeColoredHypergraph& h, const Variant& variant,
                      ColorAssignment assignment, const LpSolution& sol, double promised_alpha,
                      double promised_beta) {
    RoundingResult res;
    res.assignment = std::move(assignment);
    res.report = evaluate(h, res.assignment, variant);
    res.certificate.promised_alpha = promised_alpha;
    res.certificate.promised_beta = promised_beta;
    res.certificate.lp_value = std::max(0.0, sol.objective);
    res.certificate.mistakes = res.report.mistakes;
    res.certificate.budget_used = res.report.budget_used;
    res.certificate.observed_alpha = observed_alpha(res.report.mistakes, res.certificate.lp_value);
    res.certificate.observed_beta = observed_beta(res.report.budget_used, variant.budget);
    enforce(res.certificate);
    return res;
}

}  // namespace

long long round_half(double x, double delta) {
    const double fl = std::floor(x);
    return static_cast<long long>(x - fl < delta ? fl : std::ceil(x));
}

double rho_single_criteria(long long b) {
    return static_cast<double>(b) / static_cast<double>(b + 1);
}

RoundingResult round_local(const EdgeColoredHypergraph& h, long long b, const LpSolution& sol,
                           double rho, bool fill) {
    if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in (0,1)");
    if (b < 1) throw std::invalid_argument("local budget must be at least 1");

    ColorAssignment a(h.num_nodes());
    const double threshold = 1.0 - rho;
    for (NodeId v = 1; v <= h.num_nodes(); ++v)
        for (const auto& [c, x] : sol.node_color_x[v])
            if (x < threshold - kGuard) a.colors[v].push_back(c);
    if (fill) fill_favorite(h, a);

    // For non-integral b/rho the paper's per-node cap b/rho - 1 relaxes to
    // ceil(b/rho) - 1; both presets hit the integral case exactly.
    const double per_node_cap = std::ceil(b / rho - kGuard) - 1.0;
    return finish(h, Variant::local(b), std::move(a), sol, 1.0 / (1.0 - rho),
                  per_node_cap / static_cast<double>(b));
}

RoundingResult round_global(const EdgeColoredHypergraph& h, long long b, const LpSolution& sol,
                            double delta, bool fill) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
    if (b < 0) throw std::invalid_argument("negative budget");

    ColorAssignment a(h.num_nodes());
    for (NodeId v = 1; v <= h.num_nodes(); ++v) {
        const double threshold =
            (1.0 - delta) / static_cast<double>(round_half(sol.overlap_y[v], delta) + 2);
        for (const auto& [c, x] : sol.node_color_x[v])
            if (x < threshold - kGuard) a.colors[v].push_back(c);
    }
    if (fill) fill_favorite(h, a);

    return finish(h, Variant::global(b), std::move(a), sol,
                  static_cast<double>(b + 2) / (1.0 - delta) + 1.0, 1.0 / delta);
}

RoundingResult round_robust(const EdgeColoredHypergraph& h, long long b, const LpSolution& sol,
                            double eps, bool fill) {
    if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("eps must lie in (0,1/2)");
    if (b < 0) throw std::invalid_argument("negative budget");

    ColorAssignment a(h.num_nodes());
    for (NodeId v = 1; v <= h.num_nodes(); ++v) {
        if (sol.deletion_z[v] >= eps - kGuard) {
            a.deleted.push_back(v);
            continue;
        }
        // the node-sum constraint allows at most one color below 1/2
        for (const auto& [c, x] : sol.node_color_x[v])
            if (x < 0.5 - kGuard) a.colors[v].push_back(c);
    }
    if (fill) fill_favorite(h, a);

    return finish(h, Variant::robust(b), std::move(a), sol, 2.0 / (1.0 - 2.0 * eps), 1.0 / eps);
}

}  // namespace ecc
