#pragma once

#include <cstdint>
#include <vector>

#include "ecc/assignment.hpp"
#include "ecc/hypergraph.hpp"

namespace ecc {

struct EvaluationReport {
    long long mistakes = 0;        // edges with a surviving member missing the edge color
    long long satisfied = 0;       // |E| - mistakes
    long long linear_penalty = 0;  // node-edge errors over surviving members
    long long budget_used = 0;     // filled by the Variant overload, else 0
    long long unused_nodes = 0;    // nodes incident to no satisfied edge
    std::vector<std::uint8_t> edge_satisfied;  // [1..m]
};

/// Counts mistakes and node-edge errors of an assignment. Pure; parallelized
/// over edges when OpenMP is enabled, with results identical to the serial
/// reference (all reductions are integer sums).
EvaluationReport evaluate(const EdgeColoredHypergraph& h, const ColorAssignment& a);

EvaluationReport evaluate(const EdgeColoredHypergraph& h, const ColorAssignment& a,
                          const Variant& variant);

/// Single-threaded reference used by tests and the benchmark.
EvaluationReport evaluate_serial(const EdgeColoredHypergraph& h, const ColorAssignment& a);

}  // namespace ecc
