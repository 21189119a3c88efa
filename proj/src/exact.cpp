#include "ecc/exact.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace ecc {

namespace {

double binomial(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    r = std::min(r, n - r);
    double out = 1.0;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

constexpr double kSearchSpaceGuard = 1e7;

// Incident colors of v, ascending.
std::vector<ColorId> incident_colors(const EdgeColoredHypergraph& h, NodeId v) {
    std::vector<ColorId> cs;
    cs.reserve(h.color_counts(v).size());
    for (const auto& [c, cnt] : h.color_counts(v)) cs.push_back(c);
    return cs;
}

// Exhaustive minimizer. Walks nodes in order, trying each admissible color
// set (deletion counts as a choice for robust), keeping per-edge error
// counts incrementally. Mistakes only grow along a branch, so cutting at
// the incumbent keeps the search exact.
class BruteForce {
public:
    BruteForce(const EdgeColoredHypergraph& h, const Variant& variant)
        : h_(h), variant_(variant), edge_errors_(h.num_edges() + 1, 0),
          node_deleted_(h.num_nodes() + 1, 0), current_(h.num_nodes()),
          best_witness_(h.num_nodes()) {}

    BruteForceResult run() {
        best_ = h_.num_edges() + 1;
        descend(1);
        std::vector<NodeId> deleted;
        for (NodeId v = 1; v <= h_.num_nodes(); ++v)
            if (best_deleted_.size() > static_cast<size_t>(v) && best_deleted_[v]) deleted.push_back(v);
        best_witness_.deleted = std::move(deleted);
        return {best_, best_witness_};
    }

private:
    void descend(NodeId v) {
        if (mistakes_ >= best_) return;
        if (v > h_.num_nodes()) {
            best_ = mistakes_;
            best_witness_ = current_;
            best_deleted_ = node_deleted_;
            return;
        }
        switch (variant_.kind) {
            case VariantKind::LocalOverlap: branch_local(v); break;
            case VariantKind::GlobalOverlap: branch_global(v); break;
            case VariantKind::Robust: branch_robust(v); break;
        }
    }

    void branch_local(NodeId v) {
        auto colors = incident_colors(h_, v);
        const int take = static_cast<int>(
            std::min<long long>(variant_.budget, static_cast<long long>(colors.size())));
        chosen_.clear();
        choose_and_descend(v, colors, 0, take);
    }

    void branch_global(NodeId v) {
        auto colors = incident_colors(h_, v);
        if (colors.empty()) {
            current_.colors[v] = {1};
            apply_and_descend(v);
            current_.colors[v].clear();
            return;
        }
        const int max_size = static_cast<int>(std::min<long long>(
            variant_.budget - extras_ + 1, static_cast<long long>(colors.size())));
        for (int size = 1; size <= max_size; ++size) {
            extras_ += size - 1;
            chosen_.clear();
            choose_and_descend(v, colors, 0, size);
            extras_ -= size - 1;
        }
    }

    void branch_robust(NodeId v) {
        auto colors = incident_colors(h_, v);
        if (colors.empty()) colors.push_back(1);
        for (ColorId c : colors) {
            current_.colors[v] = {c};
            apply_and_descend(v);
            current_.colors[v].clear();
        }
        if (deletions_ < variant_.budget) {
            ++deletions_;
            node_deleted_[v] = 1;
            descend(v + 1);  // deleted nodes add no edge errors
            node_deleted_[v] = 0;
            --deletions_;
        }
    }

    // Lexicographic size-`left` combinations from colors[from..].
    void choose_and_descend(NodeId v, const std::vector<ColorId>& colors, int from, int left) {
        if (left == 0) {
            current_.colors[v] = chosen_;
            apply_and_descend(v);
            current_.colors[v].clear();
            return;
        }
        for (int i = from; i + left <= static_cast<int>(colors.size()); ++i) {
            chosen_.push_back(colors[i]);
            choose_and_descend(v, colors, i + 1, left - 1);
            chosen_.pop_back();
        }
    }

    void apply_and_descend(NodeId v) {
        const auto& cs = current_.colors[v];
        int made = 0;
        for (EdgeId e : h_.incident_edges(v)) {
            if (std::find(cs.begin(), cs.end(), h_.edge(e).color) == cs.end()) {
                if (edge_errors_[e]++ == 0) ++mistakes_;
                ++made;
            }
        }
        descend(v + 1);
        if (made) {
            for (EdgeId e : h_.incident_edges(v)) {
                if (std::find(cs.begin(), cs.end(), h_.edge(e).color) == cs.end()) {
                    if (--edge_errors_[e] == 0) --mistakes_;
                }
            }
        }
    }

    const EdgeColoredHypergraph& h_;
    Variant variant_;
    std::vector<int> edge_errors_;
    std::vector<std::uint8_t> node_deleted_, best_deleted_;
    ColorAssignment current_, best_witness_;
    std::vector<ColorId> chosen_;
    long long mistakes_ = 0, best_ = 0, extras_ = 0, deletions_ = 0;
};

}  // namespace

double brute_force_search_space(const EdgeColoredHypergraph& h, const Variant& variant) {
    double product = 1.0;
    for (NodeId v = 1; v <= h.num_nodes(); ++v) {
        const int dchi = h.chromatic_degree(v);
        double choices = 1.0;
        switch (variant.kind) {
            case VariantKind::LocalOverlap:
                choices = binomial(dchi, static_cast<int>(std::min<long long>(variant.budget, dchi)));
                break;
            case VariantKind::GlobalOverlap: {
                choices = 0.0;
                const int max_size =
                    static_cast<int>(std::min<long long>(variant.budget + 1, dchi));
                for (int s = 1; s <= max_size; ++s) choices += binomial(dchi, s);
                choices = std::max(choices, 1.0);
                break;
            }
            case VariantKind::Robust:
                choices = std::max(dchi, 1) + (variant.budget > 0 ? 1.0 : 0.0);
                break;
        }
        product *= std::max(choices, 1.0);
        if (product > kSearchSpaceGuard) return product;
    }
    return product;
}

BruteForceResult brute_force_optimum(const EdgeColoredHypergraph& h, const Variant& variant) {
    if (!variant.valid()) throw std::invalid_argument("invalid budget for variant");
    const double space = brute_force_search_space(h, variant);
    if (space > kSearchSpaceGuard)
        throw GuardExceeded("brute force search space " + std::to_string(space) +
                            " exceeds guard " + std::to_string(kSearchSpaceGuard));
    return BruteForce(h, variant).run();
}

namespace {

class Branching {
public:
    Branching(const EdgeColoredHypergraph& h, const Variant& variant, long long t)
        : h_(h), variant_(variant), t_left_(t),
          b_left_(variant.kind == VariantKind::LocalOverlap ? 0 : variant.budget),
          edge_deleted_(h.num_edges() + 1, 0), node_deleted_(h.num_nodes() + 1, 0),
          lambda_(h.num_nodes() + 1) {}

    DecisionResult run() {
        DecisionResult res;
        res.yes = search();
        res.deleted_edges = deletions_;
        std::sort(res.deleted_edges.begin(), res.deleted_edges.end());
        res.witness = std::move(witness_);
        res.max_depth = max_depth_;
        res.explored = explored_;
        if (!res.yes) {
            res.deleted_edges.clear();
            res.witness = ColorAssignment(h_.num_nodes());
        }
        return res;
    }

private:
    bool search() {
        ++explored_;
        max_depth_ = std::max(max_depth_, depth_);
        switch (variant_.kind) {
            case VariantKind::LocalOverlap: return search_local();
            case VariantKind::GlobalOverlap: return search_global();
            case VariantKind::Robust: return search_robust();
        }
        return false;
    }

    bool search_local() {
        // conflict: b+1 live edges with pairwise distinct colors at one node
        for (NodeId v = 1; v <= h_.num_nodes(); ++v) {
            seen_.clear();
            witness_edges_.clear();
            for (EdgeId e : h_.incident_edges(v)) {
                if (edge_deleted_[e]) continue;
                const ColorId c = h_.edge(e).color;
                if (std::find(seen_.begin(), seen_.end(), c) != seen_.end()) continue;
                seen_.push_back(c);
                witness_edges_.push_back(e);
                if (static_cast<long long>(seen_.size()) == variant_.budget + 1) break;
            }
            if (static_cast<long long>(seen_.size()) < variant_.budget + 1) continue;
            if (t_left_ == 0) return false;
            auto witness = witness_edges_;  // branching invalidates the scratch buffer
            for (EdgeId e : witness)
                if (delete_edge_and_search(e)) return true;
            return false;
        }
        // conflict-free: every node covers its live colors within budget
        witness_ = ColorAssignment(h_.num_nodes());
        for (NodeId v = 1; v <= h_.num_nodes(); ++v)
            witness_.colors[v] = live_colors(v);
        return true;
    }

    bool search_global() {
        for (NodeId v = 1; v <= h_.num_nodes(); ++v) {
            EdgeId first = 0;
            for (EdgeId e : h_.incident_edges(v)) {
                if (edge_deleted_[e]) continue;
                const ColorId c = h_.edge(e).color;
                if (std::binary_search(lambda_[v].begin(), lambda_[v].end(), c)) continue;
                if (first == 0) {
                    first = e;
                } else if (h_.edge(first).color != c) {
                    return branch_global(v, first, e);
                }
            }
        }
        // conflict-free: at most one uncovered color per node; one free color
        // each finishes the job
        witness_ = ColorAssignment(h_.num_nodes());
        for (NodeId v = 1; v <= h_.num_nodes(); ++v) {
            witness_.colors[v] = lambda_[v];
            auto uncovered = live_colors_outside(v, lambda_[v]);
            for (ColorId c : uncovered) witness_.add_color(v, c);
            if (witness_.colors[v].empty()) {
                ColorId fav = h_.favorite_color(v);
                witness_.colors[v].push_back(fav ? fav : 1);
            }
        }
        return true;
    }

    bool branch_global(NodeId v, EdgeId e, EdgeId f) {
        if (b_left_ > 0) {
            if (assign_and_search(v, h_.edge(e).color)) return true;
            if (assign_and_search(v, h_.edge(f).color)) return true;
        }
        if (t_left_ > 0) {
            if (delete_edge_and_search(e)) return true;
            if (delete_edge_and_search(f)) return true;
        }
        return false;
    }

    bool search_robust() {
        for (NodeId v = 1; v <= h_.num_nodes(); ++v) {
            if (node_deleted_[v]) continue;
            EdgeId first = 0;
            for (EdgeId e : h_.incident_edges(v)) {
                if (edge_deleted_[e]) continue;
                const ColorId c = h_.edge(e).color;
                if (first == 0) {
                    first = e;
                } else if (h_.edge(first).color != c) {
                    return branch_robust(v, first, e);
                }
            }
        }
        witness_ = ColorAssignment(h_.num_nodes());
        for (NodeId v = 1; v <= h_.num_nodes(); ++v) {
            if (node_deleted_[v]) {
                witness_.deleted.push_back(v);
                continue;
            }
            auto live = live_colors(v);
            ColorId fav = h_.favorite_color(v);
            witness_.colors[v] = {live.empty() ? (fav ? fav : 1) : live.front()};
        }
        return true;
    }

    bool branch_robust(NodeId v, EdgeId e, EdgeId f) {
        if (b_left_ > 0) {
            --b_left_;
            ++depth_;
            node_deleted_[v] = 1;
            bool ok = search();
            node_deleted_[v] = 0;
            --depth_;
            ++b_left_;
            if (ok) return true;
        }
        if (t_left_ > 0) {
            if (delete_edge_and_search(e)) return true;
            if (delete_edge_and_search(f)) return true;
        }
        return false;
    }

    bool delete_edge_and_search(EdgeId e) {
        --t_left_;
        ++depth_;
        edge_deleted_[e] = 1;
        deletions_.push_back(e);
        bool ok = search();
        if (!ok) deletions_.pop_back();
        edge_deleted_[e] = ok ? 1 : 0;
        --depth_;
        ++t_left_;
        return ok;
    }

    bool assign_and_search(NodeId v, ColorId c) {
        --b_left_;
        ++depth_;
        auto& cs = lambda_[v];
        cs.insert(std::lower_bound(cs.begin(), cs.end(), c), c);
        bool ok = search();
        if (!ok) cs.erase(std::lower_bound(cs.begin(), cs.end(), c));
        --depth_;
        ++b_left_;
        return ok;
    }

    std::vector<ColorId> live_colors(NodeId v) const {
        return live_colors_outside(v, {});
    }

    std::vector<ColorId> live_colors_outside(NodeId v, const std::vector<ColorId>& excl) const {
        std::vector<ColorId> out;
        for (EdgeId e : h_.incident_edges(v)) {
            if (edge_deleted_[e]) continue;
            const ColorId c = h_.edge(e).color;
            if (std::binary_search(excl.begin(), excl.end(), c)) continue;
            if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    const EdgeColoredHypergraph& h_;
    Variant variant_;
    long long t_left_, b_left_;
    std::vector<std::uint8_t> edge_deleted_, node_deleted_;
    std::vector<std::vector<ColorId>> lambda_;
    std::vector<EdgeId> deletions_;
    std::vector<ColorId> seen_;
    std::vector<EdgeId> witness_edges_;
    ColorAssignment witness_{0};
    int depth_ = 0, max_depth_ = 0;
    long long explored_ = 0;
};

long long saturating_mul_add(long long a, long long b, long long c) {
    if (a != 0 && b > (LLONG_MAX - c) / a) return LLONG_MAX;
    return a * b + c;
}

}  // namespace

DecisionResult decide_branching(const EdgeColoredHypergraph& h, const Variant& variant,
                                long long t) {
    if (!variant.valid()) throw std::invalid_argument("invalid budget for variant");
    if (t < 0) throw std::invalid_argument("negative mistake allowance");
    return Branching(h, variant, t).run();
}

KernelResult kernelize(const EdgeColoredHypergraph& h, const Variant& variant, long long t) {
    const long long easy_threshold =
        variant.kind == VariantKind::LocalOverlap ? variant.budget : 1;

    KernelResult res;
    std::vector<NodeId> old_to_new(h.num_nodes() + 1, 0);
    for (NodeId v = 1; v <= h.num_nodes(); ++v) {
        if (h.chromatic_degree(v) <= easy_threshold) {
            res.removed_nodes.push_back(v);
        } else {
            res.node_to_original.push_back(v);
            old_to_new[v] = static_cast<NodeId>(res.node_to_original.size());
        }
    }

    std::vector<Edge> edges;
    for (EdgeId e = 1; e <= h.num_edges(); ++e) {
        Edge shrunk;
        shrunk.color = h.edge(e).color;
        for (NodeId v : h.edge(e).members)
            if (old_to_new[v]) shrunk.members.push_back(old_to_new[v]);
        if (shrunk.members.empty()) continue;  // only easy nodes: always satisfiable
        edges.push_back(std::move(shrunk));
        res.edge_to_original.push_back(e);
    }

    const auto kept = static_cast<long long>(res.node_to_original.size());
    res.reduced = build_hypergraph(std::move(edges), static_cast<int>(kept), h.num_colors());

    if (kept == 0) {
        res.decided = true;
    } else {
        const long long slack = variant.kind == VariantKind::LocalOverlap ? 0 : variant.budget;
        if (kept > saturating_mul_add(res.reduced.rank(), t, slack)) res.decided = false;
    }
    return res;
}

namespace {

// Easy nodes cover all of their incident colors without budget; fill them
// back into a kernel certificate.
void fill_easy_node(const EdgeColoredHypergraph& h, const Variant& variant, NodeId v,
                    ColorAssignment& a) {
    std::vector<ColorId> colors;
    for (const auto& [c, cnt] : h.color_counts(v)) colors.push_back(c);
    if (variant.kind == VariantKind::LocalOverlap) {
        a.colors[v] = std::move(colors);
    } else {
        a.colors[v] = {colors.empty() ? ColorId{1} : colors.front()};
    }
}

}  // namespace

DecisionResult decide_kernelized(const EdgeColoredHypergraph& h, const Variant& variant,
                                 long long t) {
    KernelResult kernel = kernelize(h, variant, t);
    DecisionResult res;
    if (kernel.decided.has_value()) {
        res.yes = *kernel.decided;
        if (res.yes) {
            res.witness = ColorAssignment(h.num_nodes());
            for (NodeId v : kernel.removed_nodes) fill_easy_node(h, variant, v, res.witness);
        }
        return res;
    }
    DecisionResult inner = decide_branching(kernel.reduced, variant, t);
    res.yes = inner.yes;
    res.max_depth = inner.max_depth;
    res.explored = inner.explored;
    if (!res.yes) return res;

    res.witness = ColorAssignment(h.num_nodes());
    for (EdgeId e : inner.deleted_edges) res.deleted_edges.push_back(kernel.edge_to_original[e - 1]);
    std::sort(res.deleted_edges.begin(), res.deleted_edges.end());
    for (NodeId nv = 1; nv <= kernel.reduced.num_nodes(); ++nv) {
        const NodeId ov = kernel.node_to_original[nv - 1];
        res.witness.colors[ov] = inner.witness.colors[nv];
    }
    for (NodeId nv : inner.witness.deleted)
        res.witness.deleted.push_back(kernel.node_to_original[nv - 1]);
    std::sort(res.witness.deleted.begin(), res.witness.deleted.end());
    for (NodeId v : kernel.removed_nodes) fill_easy_node(h, variant, v, res.witness);
    return res;
}

DecisionResult solve_via_decision(const EdgeColoredHypergraph& h, const Variant& variant,
                                  int depth_guard) {
    const long long b = variant.kind == VariantKind::LocalOverlap ? 0 : variant.budget;
    for (long long t = 0;; ++t) {
        if (t + b > depth_guard)
            throw GuardExceeded("decision search depth " + std::to_string(t + b) +
                                " exceeds guard " + std::to_string(depth_guard));
        DecisionResult res = decide_branching(h, variant, t);
        if (res.yes) return res;
    }
}

long long optimize_via_decision(const EdgeColoredHypergraph& h, const Variant& variant,
                                int depth_guard) {
    return static_cast<long long>(solve_via_decision(h, variant, depth_guard).deleted_edges.size());
}

}  // namespace ecc
