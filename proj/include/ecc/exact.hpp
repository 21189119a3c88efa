#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ecc/assignment.hpp"
#include "ecc/hypergraph.hpp"

namespace ecc {

struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BruteForceResult {
    long long mistakes = 0;
    ColorAssignment witness;
};

/// Exhaustive minimum of the mistake objective over the variant's feasible
/// assignments. Search covers incident colors per node (plus deletion
/// choices for robust); refuses with GuardExceeded when the enumeration
/// space exceeds 1e7 combinations.
BruteForceResult brute_force_optimum(const EdgeColoredHypergraph& h, const Variant& variant);

/// Enumeration-space estimate used by the brute-force guard.
double brute_force_search_space(const EdgeColoredHypergraph& h, const Variant& variant);

struct DecisionResult {
    bool yes = false;
    std::vector<EdgeId> deleted_edges;  // X, ascending
    ColorAssignment witness;            // satisfies every edge outside X
    int max_depth = 0;
    long long explored = 0;
};

/// Conflict branching: decides whether deleting at most t edges leaves an
/// instance colorable within the variant's budget.
DecisionResult decide_branching(const EdgeColoredHypergraph& h, const Variant& variant,
                                long long t);

struct KernelResult {
    EdgeColoredHypergraph reduced;
    std::vector<NodeId> removed_nodes;   // original ids, ascending
    std::vector<NodeId> node_to_original;  // [1..n'] -> original node id
    std::vector<EdgeId> edge_to_original;  // [1..m'] -> original edge id
    std::optional<bool> decided;  // set when the kernel answers outright
};

/// Removes easy nodes (coverable without spending budget), shrinking edges
/// and dropping edges that lose all members. Answers NO outright when the
/// kernel has more than rank*t (local) or rank*t+b (global/robust) nodes,
/// and YES when it is empty.
KernelResult kernelize(const EdgeColoredHypergraph& h, const Variant& variant, long long t);

/// decide_branching on the kernel, with the certificate mapped back to
/// original node and edge ids.
DecisionResult decide_kernelized(const EdgeColoredHypergraph& h, const Variant& variant,
                                 long long t);

/// Smallest t for which the decision answer is yes. Throws GuardExceeded
/// when t + budget would exceed depth_guard.
long long optimize_via_decision(const EdgeColoredHypergraph& h, const Variant& variant,
                                int depth_guard = 30);

/// Witness-producing variant of optimize_via_decision.
DecisionResult solve_via_decision(const EdgeColoredHypergraph& h, const Variant& variant,
                                  int depth_guard = 30);

}  // namespace ecc
