#include "ecc/lp_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ecc/simplex.hpp"

namespace ecc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::IterationLimit: return "iteration-limit";
    }
    return "?";
}

std::string LpModel::var_name(int idx) const {
    const LpVariable& var = vars[idx];
    switch (var.role) {
        case VarRole::EdgeMistake: return "x_e" + std::to_string(var.edge);
        case VarRole::NodeColor:
            return "x_v" + std::to_string(var.node) + "_c" + std::to_string(var.color);
        case VarRole::Overlap: return "y_v" + std::to_string(var.node);
        case VarRole::Deletion: return "z_v" + std::to_string(var.node);
    }
    return "?";
}

std::string LpModel::row_name(int idx) const {
    const LpRow& row = rows[idx];
    switch (row.kind) {
        case LpRow::Kind::NodeSum: return "ns_v" + std::to_string(row.node);
        case LpRow::Kind::Coverage:
            return "cov_e" + std::to_string(row.edge) + "_v" + std::to_string(row.node);
        case LpRow::Kind::Budget: return "budget";
    }
    return "?";
}

namespace {

int node_color_index(const LpModel& model, NodeId v, ColorId c) {
    const auto& list = model.node_color_var[v];
    auto it = std::lower_bound(list.begin(), list.end(), c,
                               [](const auto& p, ColorId x) { return p.first < x; });
    if (it == list.end() || it->first != c)
        throw std::logic_error("no LP variable for node " + std::to_string(v) + " color " +
                               std::to_string(c));
    return it->second;
}

}  // namespace

LpModel build_lp(const EdgeColoredHypergraph& h, const Variant& variant) {
    if (!variant.valid()) throw std::invalid_argument("invalid budget for variant");
    const int n = h.num_nodes();
    const int m = h.num_edges();

    LpModel model;
    model.variant = variant;
    model.edge_var.assign(m + 1, -1);
    model.node_color_var.assign(n + 1, {});

    for (EdgeId e = 1; e <= m; ++e) {
        model.edge_var[e] = model.num_vars();
        model.vars.push_back({VarRole::EdgeMistake, e, 0, 0, 0.0, 1.0, 1.0});
    }
    for (NodeId v = 1; v <= n; ++v) {
        for (const auto& [c, cnt] : h.color_counts(v)) {
            model.node_color_var[v].emplace_back(c, model.num_vars());
            model.vars.push_back({VarRole::NodeColor, 0, v, c, 0.0, 1.0, 0.0});
        }
    }
    if (variant.kind == VariantKind::GlobalOverlap) {
        model.overlap_var.assign(n + 1, -1);
        for (NodeId v = 1; v <= n; ++v) {
            model.overlap_var[v] = model.num_vars();
            model.vars.push_back({VarRole::Overlap, 0, v, 0, 0.0, kInf, 0.0});
        }
    } else if (variant.kind == VariantKind::Robust) {
        model.deletion_var.assign(n + 1, -1);
        for (NodeId v = 1; v <= n; ++v) {
            model.deletion_var[v] = model.num_vars();
            model.vars.push_back({VarRole::Deletion, 0, v, 0, 0.0, 1.0, 0.0});
        }
    }

    // node color sums, with absent (non-incident) variables fixed at their
    // optimal value 1 and folded into the right-hand side
    for (NodeId v = 1; v <= n; ++v) {
        if (h.degree(v) == 0) continue;
        LpRow row;
        row.kind = LpRow::Kind::NodeSum;
        row.node = v;
        row.upper = kInf;
        const double dchi = h.chromatic_degree(v);
        for (const auto& [c, idx] : model.node_color_var[v]) row.coeffs.emplace_back(idx, 1.0);
        switch (variant.kind) {
            case VariantKind::LocalOverlap:
                row.lower = dchi - static_cast<double>(variant.budget);
                break;
            case VariantKind::GlobalOverlap:
                row.coeffs.emplace_back(model.overlap_var[v], 1.0);
                row.lower = dchi - 1.0;
                break;
            case VariantKind::Robust:
                row.lower = dchi - 1.0;
                break;
        }
        model.rows.push_back(std::move(row));
    }

    for (EdgeId e = 1; e <= m; ++e) {
        const Edge& edge = h.edge(e);
        for (NodeId v : edge.members) {
            LpRow row;
            row.kind = LpRow::Kind::Coverage;
            row.node = v;
            row.edge = e;
            row.lower = -kInf;
            row.upper = 0.0;
            row.coeffs.emplace_back(node_color_index(model, v, edge.color), 1.0);
            if (variant.kind == VariantKind::Robust)
                row.coeffs.emplace_back(model.deletion_var[v], -1.0);
            row.coeffs.emplace_back(model.edge_var[e], -1.0);
            model.rows.push_back(std::move(row));
        }
    }

    if (variant.kind != VariantKind::LocalOverlap) {
        LpRow row;
        row.kind = LpRow::Kind::Budget;
        row.lower = -kInf;
        row.upper = static_cast<double>(variant.budget);
        const auto& per_node = variant.kind == VariantKind::GlobalOverlap ? model.overlap_var
                                                                          : model.deletion_var;
        for (NodeId v = 1; v <= n; ++v) row.coeffs.emplace_back(per_node[v], 1.0);
        model.rows.push_back(std::move(row));
    }
    return model;
}

void write_lp_format(std::ostream& out, const LpModel& model) {
    out << "\\ ECC relaxation: variant=" << variant_name(model.variant.kind)
        << " budget=" << model.variant.budget << "\n";
    out << "Minimize\n obj:";
    bool first = true;
    for (int j = 0; j < model.num_vars(); ++j) {
        if (model.vars[j].objective == 0.0) continue;
        out << (first ? " " : " + ") << model.var_name(j);
        first = false;
    }
    if (first) out << " 0 " << model.var_name(0);
    out << "\nSubject To\n";
    for (int i = 0; i < model.num_rows(); ++i) {
        const LpRow& row = model.rows[i];
        out << ' ' << model.row_name(i) << ':';
        bool lead = true;
        for (const auto& [j, a] : row.coeffs) {
            if (a >= 0)
                out << (lead ? " " : " + ");
            else
                out << " - ";
            if (std::abs(a) != 1.0) out << std::abs(a) << ' ';
            out << model.var_name(j);
            lead = false;
        }
        if (std::isfinite(row.upper))
            out << " <= " << row.upper;
        else
            out << " >= " << row.lower;
        out << '\n';
    }
    out << "Bounds\n";
    for (int j = 0; j < model.num_vars(); ++j) {
        const LpVariable& var = model.vars[j];
        if (std::isfinite(var.upper))
            out << ' ' << var.lower << " <= " << model.var_name(j) << " <= " << var.upper << '\n';
        else
            out << ' ' << model.var_name(j) << " >= " << var.lower << '\n';
    }
    out << "End\n";
}

double LpSolution::node_color_value(NodeId v, ColorId c) const {
    const auto& list = node_color_x[v];
    auto it = std::lower_bound(list.begin(), list.end(), c,
                               [](const auto& p, ColorId x) { return p.first < x; });
    return (it != list.end() && it->first == c) ? it->second : 1.0;
}

LpSolution solve_lp(const LpModel& model) {
    SimplexOptions options;
    std::vector<bool> at_upper(model.num_vars());
    for (int j = 0; j < model.num_vars(); ++j) {
        const VarRole role = model.vars[j].role;
        at_upper[j] = role == VarRole::EdgeMistake || role == VarRole::NodeColor;
    }
    options.start_at_upper = &at_upper;

    SimplexResult raw = solve_simplex(model, options);
    LpSolution sol;
    sol.status = raw.status;
    sol.objective = raw.objective;
    sol.iterations = raw.iterations;
    sol.values = std::move(raw.x);
    if (sol.status != SolveStatus::Optimal) return sol;

    constexpr double tol = 1e-9;
    double objective = 0.0;
    for (int j = 0; j < model.num_vars(); ++j) {
        const LpVariable& var = model.vars[j];
        const double x = sol.values[j];
        if (x < var.lower - tol || x > var.upper + tol)
            throw std::logic_error("LP solution violates bound of " + model.var_name(j));
        objective += var.objective * x;
    }
    for (int i = 0; i < model.num_rows(); ++i) {
        const LpRow& row = model.rows[i];
        double activity = 0.0;
        for (const auto& [j, a] : row.coeffs) activity += a * sol.values[j];
        if (activity < row.lower - tol || activity > row.upper + tol)
            throw std::logic_error("LP solution violates row " + model.row_name(i));
    }
    if (std::abs(objective - sol.objective) > tol)
        throw std::logic_error("LP objective mismatch on recomputation");

    const int n = static_cast<int>(model.node_color_var.size()) - 1;
    const int m = static_cast<int>(model.edge_var.size()) - 1;
    sol.edge_x.assign(m + 1, 0.0);
    for (EdgeId e = 1; e <= m; ++e) sol.edge_x[e] = sol.values[model.edge_var[e]];
    sol.node_color_x.assign(n + 1, {});
    for (NodeId v = 1; v <= n; ++v)
        for (const auto& [c, idx] : model.node_color_var[v])
            sol.node_color_x[v].emplace_back(c, sol.values[idx]);
    if (!model.overlap_var.empty()) {
        sol.overlap_y.assign(n + 1, 0.0);
        for (NodeId v = 1; v <= n; ++v) sol.overlap_y[v] = sol.values[model.overlap_var[v]];
    }
    if (!model.deletion_var.empty()) {
        sol.deletion_z.assign(n + 1, 0.0);
        for (NodeId v = 1; v <= n; ++v) sol.deletion_z[v] = sol.values[model.deletion_var[v]];
    }
    return sol;
}

double lp_lower_bound(const EdgeColoredHypergraph& h, const Variant& variant) {
    LpSolution sol = solve_lp(build_lp(h, variant));
    if (sol.status != SolveStatus::Optimal)
        throw std::logic_error(std::string("ECC relaxation must solve to optimality, got ") +
                               status_name(sol.status));
    return std::max(0.0, sol.objective);
}

}  // namespace ecc
