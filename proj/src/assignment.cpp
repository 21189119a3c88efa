#include "ecc/assignment.hpp"

#include <algorithm>

namespace ecc {

const char* variant_name(VariantKind kind) {
    switch (kind) {
        case VariantKind::LocalOverlap: return "local";
        case VariantKind::GlobalOverlap: return "global";
        case VariantKind::Robust: return "robust";
    }
    return "?";
}

bool ColorAssignment::has_color(NodeId v, ColorId c) const {
    return std::binary_search(colors[v].begin(), colors[v].end(), c);
}

bool ColorAssignment::is_deleted(NodeId v) const {
    return std::binary_search(deleted.begin(), deleted.end(), v);
}

void ColorAssignment::add_color(NodeId v, ColorId c) {
    auto& cs = colors[v];
    auto it = std::lower_bound(cs.begin(), cs.end(), c);
    if (it == cs.end() || *it != c) cs.insert(it, c);
}

FeasibilityResult check_feasible(const Variant& variant, const ColorAssignment& a) {
    const int n = a.num_nodes();
    switch (variant.kind) {
        case VariantKind::LocalOverlap: {
            if (!a.deleted.empty())
                return {false, "deleted set nonempty for local variant"};
            for (NodeId v = 1; v <= n; ++v) {
                auto sz = static_cast<long long>(a.colors[v].size());
                if (sz > variant.budget)
                    return {false, "node " + std::to_string(v) + " has " + std::to_string(sz) +
                                       " > " + std::to_string(variant.budget) + " colors"};
            }
            return {};
        }
        case VariantKind::GlobalOverlap: {
            if (!a.deleted.empty())
                return {false, "deleted set nonempty for global variant"};
            long long extra = 0;
            for (NodeId v = 1; v <= n; ++v) {
                if (a.colors[v].empty())
                    return {false, "node " + std::to_string(v) + " has no color"};
                extra += static_cast<long long>(a.colors[v].size()) - 1;
            }
            if (extra > variant.budget)
                return {false, std::to_string(extra) + " extra colors > budget " +
                                   std::to_string(variant.budget)};
            return {};
        }
        case VariantKind::Robust: {
            auto deleted = static_cast<long long>(a.deleted.size());
            if (deleted > variant.budget)
                return {false, std::to_string(deleted) + " deletions > budget " +
                                   std::to_string(variant.budget)};
            for (NodeId v = 1; v <= n; ++v) {
                if (a.is_deleted(v)) continue;
                if (a.colors[v].size() != 1)
                    return {false, "node " + std::to_string(v) + " has " +
                                       std::to_string(a.colors[v].size()) +
                                       " colors, robust requires exactly 1"};
            }
            return {};
        }
    }
    return {};
}

long long budget_used(const Variant& variant, const ColorAssignment& a) {
    const int n = a.num_nodes();
    switch (variant.kind) {
        case VariantKind::LocalOverlap: {
            long long mx = 0;
            for (NodeId v = 1; v <= n; ++v)
                mx = std::max(mx, static_cast<long long>(a.colors[v].size()));
            return mx;
        }
        case VariantKind::GlobalOverlap: {
            long long extra = 0;
            for (NodeId v = 1; v <= n; ++v)
                extra += std::max<long long>(0, static_cast<long long>(a.colors[v].size()) - 1);
            return extra;
        }
        case VariantKind::Robust:
            return static_cast<long long>(a.deleted.size());
    }
    return 0;
}

}  // namespace ecc
