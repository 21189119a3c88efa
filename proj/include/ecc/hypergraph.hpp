#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Node, color, and edge ids are 1-based throughout the library, matching the
// text format. Per-node tables are sized n+1 (index 0 unused), per-edge
// tables m+1.

namespace ecc {

using NodeId = std::int32_t;
using ColorId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
    ColorId color = 0;
    std::vector<NodeId> members;  // input order, no duplicates

    int size() const { return static_cast<int>(members.size()); }
};

/// Immutable edge-colored hypergraph with precomputed incidence, per-node
/// color counts, and per-node color preference order.
class EdgeColoredHypergraph {
public:
    EdgeColoredHypergraph() = default;

    int num_nodes() const { return n_; }
    int num_colors() const { return k_; }
    int num_edges() const { return static_cast<int>(edges_.size()) - 1; }
    int rank() const { return rank_; }  // 0 when there are no edges

    const Edge& edge(EdgeId e) const { return edges_[e]; }

    int degree(NodeId v) const { return static_cast<int>(incidence_[v].size()); }
    int chromatic_degree(NodeId v) const { return static_cast<int>(color_counts_[v].size()); }

    /// Edge ids incident to v, ascending.
    const std::vector<EdgeId>& incident_edges(NodeId v) const { return incidence_[v]; }

    /// (color, count) pairs with count > 0, sorted by color id ascending.
    const std::vector<std::pair<ColorId, int>>& color_counts(NodeId v) const {
        return color_counts_[v];
    }

    /// Number of edges of color c incident to v.
    int color_count(NodeId v, ColorId c) const;

    /// v's incident colors sorted by count descending, ties by color id
    /// ascending. Colors with zero count are omitted; the list has
    /// chromatic_degree(v) entries.
    const std::vector<ColorId>& preference(NodeId v) const { return preference_[v]; }

    /// v's most frequent incident color, or 0 for isolated nodes.
    ColorId favorite_color(NodeId v) const {
        return preference_[v].empty() ? 0 : preference_[v][0];
    }

    friend EdgeColoredHypergraph build_hypergraph(std::vector<Edge> edges, int n, int k);

private:
    int n_ = 0;
    int k_ = 0;
    int rank_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<std::vector<std::pair<ColorId, int>>> color_counts_;
    std::vector<std::vector<ColorId>> preference_;
};

/// Validates and indexes an edge list. Throws InvalidInstance on an
/// out-of-range id, a duplicate node within an edge, or an empty edge; the
/// message carries the 1-based edge ordinal.
EdgeColoredHypergraph build_hypergraph(std::vector<Edge> edges, int n, int k);

struct InvalidInstance : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Per-node structural statistics.
struct NodeStructure {
    int degree = 0;
    int chromatic_degree = 0;
    int non_dominant_degree = 0;   // degree minus count of the favorite color
    double non_dominant_pct = 0.0; // non_dominant_degree / degree, 0 for isolated nodes
};

struct StructureStats {
    std::vector<NodeStructure> per_node;  // [1..n]
    int max_non_dominant = 0;
    double mean_non_dominant = 0.0;
    double median_non_dominant = 0.0;
    double frac_chromatic_gt1 = 0.0;   // fraction of nodes with chromatic degree > 1
    double frac_nd_pct_ge_5 = 0.0;     // fraction with non_dominant_pct >= 0.05
    double frac_nd_pct_ge_10 = 0.0;    // fraction with non_dominant_pct >= 0.10
    double mean_edge_size = 0.0;
    int max_chromatic_degree = 0;
    double mean_chromatic_degree = 0.0;
};

StructureStats structure_stats(const EdgeColoredHypergraph& h);

/// Single-threaded reference used by tests and the benchmark.
StructureStats structure_stats_serial(const EdgeColoredHypergraph& h);

}  // namespace ecc
