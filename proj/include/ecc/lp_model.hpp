#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ecc/assignment.hpp"
#include "ecc/hypergraph.hpp"

namespace ecc {

enum class VarRole { EdgeMistake, NodeColor, Overlap, Deletion };

struct LpVariable {
    VarRole role = VarRole::EdgeMistake;
    EdgeId edge = 0;    // EdgeMistake
    NodeId node = 0;    // NodeColor / Overlap / Deletion
    ColorId color = 0;  // NodeColor
    double lower = 0.0;
    double upper = 1.0;  // +inf allowed
    double objective = 0.0;
};

struct LpRow {
    enum class Kind { NodeSum, Coverage, Budget };
    Kind kind = Kind::NodeSum;
    NodeId node = 0;  // NodeSum / Coverage
    EdgeId edge = 0;  // Coverage
    double lower = 0.0;  // lower <= a.x <= upper, -inf/+inf for one-sided rows
    double upper = 0.0;
    std::vector<std::pair<int, double>> coeffs;  // (variable index, coefficient)
};

/// Sparse LP instance. Node-color variables exist only for colors incident
/// to the node; absent variables are implicitly 1, their optimal value, and
/// the node-sum right-hand sides are shifted accordingly.
struct LpModel {
    Variant variant;
    std::vector<LpVariable> vars;
    std::vector<LpRow> rows;

    // role lookup, 1-based like the hypergraph
    std::vector<int> edge_var;                                      // [1..m]
    std::vector<std::vector<std::pair<ColorId, int>>> node_color_var;  // [1..n], color asc
    std::vector<int> overlap_var;   // [1..n] (global) else empty
    std::vector<int> deletion_var;  // [1..n] (robust) else empty

    int num_vars() const { return static_cast<int>(vars.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }
    std::string var_name(int idx) const;
    std::string row_name(int idx) const;
};

/// Relaxation for a variant: minimize the sum of edge-mistake variables
/// subject to per-node color-sum constraints, per-membership coverage
/// constraints, and a shared budget row for global/robust.
LpModel build_lp(const EdgeColoredHypergraph& h, const Variant& variant);

/// Writes the model in LP interchange text format.
void write_lp_format(std::ostream& out, const LpModel& model);

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterationLimit };

const char* status_name(SolveStatus s);

struct LpSolution {
    SolveStatus status = SolveStatus::Optimal;
    double objective = 0.0;
    long long iterations = 0;
    std::vector<double> values;  // by variable index

    // keyed views, populated by solve_lp
    std::vector<double> edge_x;  // [1..m]
    std::vector<std::vector<std::pair<ColorId, double>>> node_color_x;  // [1..n]
    std::vector<double> overlap_y;   // [1..n] or empty
    std::vector<double> deletion_z;  // [1..n] or empty

    /// Value of x_v^c; colors not incident to v report 1.
    double node_color_value(NodeId v, ColorId c) const;
};

/// Solves the relaxation with the bundled simplex solver and verifies the
/// result: primal residuals and bound violations within 1e-9 and the
/// objective matching its recomputation. Throws std::logic_error when a
/// self-check fails.
LpSolution solve_lp(const LpModel& model);

/// build_lp + solve_lp, returning the objective only. The relaxations built
/// here are always feasible and bounded; any other solver outcome raises
/// std::logic_error.
double lp_lower_bound(const EdgeColoredHypergraph& h, const Variant& variant);

}  // namespace ecc
