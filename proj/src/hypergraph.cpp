#include "ecc/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace ecc {

int EdgeColoredHypergraph::color_count(NodeId v, ColorId c) const {
    const auto& counts = color_counts_[v];
    auto it = std::lower_bound(counts.begin(), counts.end(), c,
                               [](const auto& p, ColorId x) { return p.first < x; });
    return (it != counts.end() && it->first == c) ? it->second : 0;
}

EdgeColoredHypergraph build_hypergraph(std::vector<Edge> edges, int n, int k) {
    if (n < 0 || k < 0) throw InvalidInstance("negative node or color count");

    EdgeColoredHypergraph h;
    h.n_ = n;
    h.k_ = k;
    h.edges_.resize(1);
    h.edges_.reserve(edges.size() + 1);

    std::vector<int> seen(n + 1, 0);
    int edge_no = 0;
    for (auto& e : edges) {
        ++edge_no;
        const std::string where = "edge " + std::to_string(edge_no) + ": ";
        if (e.members.empty()) throw InvalidInstance(where + "empty edge");
        if (e.color < 1 || e.color > k)
            throw InvalidInstance(where + "color " + std::to_string(e.color) +
                                  " out of range 1.." + std::to_string(k));
        for (NodeId v : e.members) {
            if (v < 1 || v > n)
                throw InvalidInstance(where + "node " + std::to_string(v) +
                                      " out of range 1.." + std::to_string(n));
            if (seen[v] == edge_no)
                throw InvalidInstance(where + "duplicate node " + std::to_string(v));
            seen[v] = edge_no;
        }
        h.rank_ = std::max(h.rank_, e.size());
        h.edges_.push_back(std::move(e));
    }

    h.incidence_.resize(n + 1);
    h.color_counts_.resize(n + 1);
    h.preference_.resize(n + 1);
    for (EdgeId e = 1; e <= h.num_edges(); ++e)
        for (NodeId v : h.edges_[e].members) h.incidence_[v].push_back(e);

    std::vector<int> count_of(k + 1, 0);
    for (NodeId v = 1; v <= n; ++v) {
        for (EdgeId e : h.incidence_[v]) ++count_of[h.edges_[e].color];
        auto& counts = h.color_counts_[v];
        for (ColorId c = 1; c <= k; ++c) {
            if (count_of[c] > 0) counts.emplace_back(c, count_of[c]);
        }
        auto& pref = h.preference_[v];
        pref.reserve(counts.size());
        for (const auto& [c, cnt] : counts) pref.push_back(c);
        // count descending, color id ascending on ties
        std::stable_sort(pref.begin(), pref.end(), [&](ColorId a, ColorId b) {
            return h.color_count(v, a) > h.color_count(v, b);
        });
        for (const auto& [c, cnt] : counts) count_of[c] = 0;
    }
    return h;
}

namespace {

StructureStats stats_impl(const EdgeColoredHypergraph& h, bool parallel) {
    const int n = h.num_nodes();
    const int m = h.num_edges();
    StructureStats s;
    s.per_node.resize(n + 1);

#pragma omp parallel for schedule(static) if (parallel)
    for (NodeId v = 1; v <= n; ++v) {
        NodeStructure& ns = s.per_node[v];
        ns.degree = h.degree(v);
        ns.chromatic_degree = h.chromatic_degree(v);
        const ColorId fav = h.favorite_color(v);
        ns.non_dominant_degree = ns.degree - (fav ? h.color_count(v, fav) : 0);
        ns.non_dominant_pct = ns.degree ? double(ns.non_dominant_degree) / ns.degree : 0.0;
    }

    if (n == 0) return s;

    long long nd_sum = 0, chrom_sum = 0;
    long long gt1 = 0, ge5 = 0, ge10 = 0;
    int nd_max = 0, chrom_max = 0;
#pragma omp parallel for schedule(static) if (parallel) \
    reduction(+ : nd_sum, chrom_sum, gt1, ge5, ge10) reduction(max : nd_max, chrom_max)
    for (NodeId v = 1; v <= n; ++v) {
        const NodeStructure& ns = s.per_node[v];
        nd_sum += ns.non_dominant_degree;
        chrom_sum += ns.chromatic_degree;
        nd_max = std::max(nd_max, ns.non_dominant_degree);
        chrom_max = std::max(chrom_max, ns.chromatic_degree);
        if (ns.chromatic_degree > 1) ++gt1;
        if (ns.non_dominant_pct >= 0.05) ++ge5;
        if (ns.non_dominant_pct >= 0.10) ++ge10;
    }

    s.max_non_dominant = nd_max;
    s.mean_non_dominant = double(nd_sum) / n;
    s.frac_chromatic_gt1 = double(gt1) / n;
    s.frac_nd_pct_ge_5 = double(ge5) / n;
    s.frac_nd_pct_ge_10 = double(ge10) / n;
    s.max_chromatic_degree = chrom_max;
    s.mean_chromatic_degree = double(chrom_sum) / n;

    std::vector<int> nd(n);
    for (NodeId v = 1; v <= n; ++v) nd[v - 1] = s.per_node[v].non_dominant_degree;
    std::sort(nd.begin(), nd.end());
    s.median_non_dominant =
        (n % 2) ? nd[n / 2] : (nd[n / 2 - 1] + nd[n / 2]) / 2.0;

    long long size_sum = 0;
    for (EdgeId e = 1; e <= m; ++e) size_sum += h.edge(e).size();
    s.mean_edge_size = m ? double(size_sum) / m : 0.0;
    return s;
}

}  // namespace

StructureStats structure_stats(const EdgeColoredHypergraph& h) { return stats_impl(h, true); }

StructureStats structure_stats_serial(const EdgeColoredHypergraph& h) {
    return stats_impl(h, false);
}

}  // namespace ecc
