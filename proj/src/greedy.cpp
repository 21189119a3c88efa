#include "ecc/greedy.hpp"

#include <algorithm>
#include <ostream>
#include <queue>

namespace ecc {

namespace {

// Favorite color per node; isolated nodes get color 1 so that variants
// requiring a nonempty color set stay feasible.
void assign_favorites(const EdgeColoredHypergraph& h, ColorAssignment& a) {
    for (NodeId v = 1; v <= h.num_nodes(); ++v) {
        ColorId fav = h.favorite_color(v);
        a.colors[v].push_back(fav ? fav : 1);
    }
}

}  // namespace

GreedyResult greedy_local(const EdgeColoredHypergraph& h, long long b) {
    GreedyResult res{ColorAssignment(h.num_nodes()), {}};
    int step = 0;
    for (NodeId v = 1; v <= h.num_nodes(); ++v) {
        const auto& pref = h.preference(v);
        const int take = static_cast<int>(std::min<long long>(b, pref.size()));
        auto& cs = res.assignment.colors[v];
        for (int i = 0; i < take; ++i) {
            cs.push_back(pref[i]);
            res.trace.steps.push_back({++step, v, GreedyStep::Action::AddColor, pref[i],
                                       h.color_count(v, pref[i])});
        }
        std::sort(cs.begin(), cs.end());
    }
    return res;
}

GreedyResult greedy_global(const EdgeColoredHypergraph& h, long long b) {
    GreedyResult res{ColorAssignment(h.num_nodes()), {}};
    assign_favorites(h, res.assignment);

    // One pending entry per node: the gain of its next favorite color.
    // Entries are pushed only after the previous one is consumed, so the
    // heap never holds stale gains. Larger gain first, then smaller node id.
    struct Entry {
        long long gain;
        NodeId node;
        int next_index;  // position in preference(v) of the color to add
        bool operator<(const Entry& o) const {
            return gain != o.gain ? gain < o.gain : node > o.node;
        }
    };
    std::priority_queue<Entry> heap;
    for (NodeId v = 1; v <= h.num_nodes(); ++v) {
        const auto& pref = h.preference(v);
        if (pref.size() > 1) heap.push({h.color_count(v, pref[1]), v, 1});
    }

    int step = 0;
    long long remaining = b;
    while (remaining > 0 && !heap.empty()) {
        Entry top = heap.top();
        if (top.gain <= 0) break;
        heap.pop();
        const auto& pref = h.preference(top.node);
        res.assignment.add_color(top.node, pref[top.next_index]);
        res.trace.steps.push_back({++step, top.node, GreedyStep::Action::AddColor,
                                   pref[top.next_index], top.gain});
        --remaining;
        if (top.next_index + 1 < static_cast<int>(pref.size()))
            heap.push({h.color_count(top.node, pref[top.next_index + 1]), top.node,
                       top.next_index + 1});
    }
    res.trace.surplus_budget = remaining;
    return res;
}

GreedyResult greedy_robust(const EdgeColoredHypergraph& h, long long b) {
    GreedyResult res{ColorAssignment(h.num_nodes()), {}};
    assign_favorites(h, res.assignment);

    // Deletion gains are independent of deletion order: every node keeps its
    // favorite color, so deleting v removes exactly its non-dominant degree
    // worth of node-edge errors.
    std::vector<NodeId> order(h.num_nodes());
    std::vector<long long> gain(h.num_nodes() + 1, 0);
    for (NodeId v = 1; v <= h.num_nodes(); ++v) {
        order[v - 1] = v;
        ColorId fav = h.favorite_color(v);
        gain[v] = h.degree(v) - (fav ? h.color_count(v, fav) : 0);
    }
    std::sort(order.begin(), order.end(), [&](NodeId x, NodeId y) {
        return gain[x] != gain[y] ? gain[x] > gain[y] : x < y;
    });

    int step = 0;
    long long remaining = b;
    for (NodeId v : order) {
        if (remaining == 0 || gain[v] <= 0) break;
        res.assignment.deleted.push_back(v);
        res.assignment.colors[v].clear();
        res.trace.steps.push_back({++step, v, GreedyStep::Action::DeleteNode, 0, gain[v]});
        --remaining;
    }
    std::sort(res.assignment.deleted.begin(), res.assignment.deleted.end());
    res.trace.surplus_budget = remaining;
    return res;
}

void write_trace_csv(std::ostream& out, const GreedyTrace& trace) {
    out << "step,node,action,gain\n";
    for (const GreedyStep& s : trace.steps) {
        out << s.step << ',' << s.node << ',';
        if (s.action == GreedyStep::Action::AddColor)
            out << "add-color-" << s.color;
        else
            out << "delete";
        out << ',' << s.errors_fixed << '\n';
    }
}

}  // namespace ecc
