#include "ecc/evaluate.hpp"

namespace ecc {

namespace {

EvaluationReport evaluate_impl(const EdgeColoredHypergraph& h, const ColorAssignment& a,
                               bool parallel) {
    const int n = h.num_nodes();
    const int m = h.num_edges();
    EvaluationReport r;
    r.edge_satisfied.assign(m + 1, 0);

    std::vector<std::uint8_t> deleted(n + 1, 0);
    for (NodeId v : a.deleted) deleted[v] = 1;

    long long mistakes = 0, penalty = 0;
#pragma omp parallel for schedule(static) if (parallel) reduction(+ : mistakes, penalty)
    for (EdgeId e = 1; e <= m; ++e) {
        const Edge& edge = h.edge(e);
        int errors = 0;
        for (NodeId v : edge.members)
            if (!deleted[v] && !a.has_color(v, edge.color)) ++errors;
        r.edge_satisfied[e] = (errors == 0);
        mistakes += (errors > 0);
        penalty += errors;
    }
    r.mistakes = mistakes;
    r.linear_penalty = penalty;
    r.satisfied = m - mistakes;

    long long unused = 0;
#pragma omp parallel for schedule(static) if (parallel) reduction(+ : unused)
    for (NodeId v = 1; v <= n; ++v) {
        bool used = false;
        for (EdgeId e : h.incident_edges(v))
            if (r.edge_satisfied[e]) { used = true; break; }
        unused += !used;
    }
    r.unused_nodes = unused;
    return r;
}

}  // namespace

EvaluationReport evaluate(const EdgeColoredHypergraph& h, const ColorAssignment& a) {
    return evaluate_impl(h, a, true);
}

EvaluationReport evaluate(const EdgeColoredHypergraph& h, const ColorAssignment& a,
                          const Variant& variant) {
    EvaluationReport r = evaluate_impl(h, a, true);
    r.budget_used = budget_used(variant, a);
    return r;
}

EvaluationReport evaluate_serial(const EdgeColoredHypergraph& h, const ColorAssignment& a) {
    return evaluate_impl(h, a, false);
}

}  // namespace ecc
