#pragma once

#include <iosfwd>
#include <vector>

#include "ecc/assignment.hpp"
#include "ecc/hypergraph.hpp"

namespace ecc {

struct GreedyStep {
    enum class Action { AddColor, DeleteNode };
    int step = 0;
    NodeId node = 0;
    Action action = Action::AddColor;
    ColorId color = 0;             // 0 for deletions
    long long errors_fixed = 0;    // node-edge errors removed by this step
};

struct GreedyTrace {
    std::vector<GreedyStep> steps;
    long long surplus_budget = 0;  // budget left when all remaining gains were zero
};

struct GreedyResult {
    ColorAssignment assignment;
    GreedyTrace trace;
};

/// Assigns each node its top min(b, chromatic degree) colors by incidence
/// count. Exactly minimizes the node-edge-error objective over assignments
/// with at most b colors per node.
GreedyResult greedy_local(const EdgeColoredHypergraph& h, long long b);

/// Starts from each node's favorite color and spends b shared additions,
/// each on the node whose next favorite color fixes the most node-edge
/// errors (ties to the smallest node id). Stops early once no addition
/// helps.
GreedyResult greedy_global(const EdgeColoredHypergraph& h, long long b);

/// Starts from each node's favorite color and deletes up to b nodes in
/// decreasing order of non-dominant degree (ties to the smallest node id),
/// skipping zero-gain deletions.
GreedyResult greedy_robust(const EdgeColoredHypergraph& h, long long b);

/// Trace rows as CSV: step,node,action,gain with action `add-color-<c>` or
/// `delete`.
void write_trace_csv(std::ostream& out, const GreedyTrace& trace);

}  // namespace ecc
