#pragma once

#include <string>
#include <vector>

#include "ecc/hypergraph.hpp"

namespace ecc {

enum class VariantKind { LocalOverlap, GlobalOverlap, Robust };

const char* variant_name(VariantKind kind);

/// A constraint family together with its budget b.
///   LocalOverlap: at most b colors per node (b >= 1).
///   GlobalOverlap: one free color per node plus b shared extra assignments.
///   Robust: up to b node deletions, one color per surviving node.
struct Variant {
    VariantKind kind = VariantKind::LocalOverlap;
    long long budget = 1;

    static Variant local(long long b) { return {VariantKind::LocalOverlap, b}; }
    static Variant global(long long b) { return {VariantKind::GlobalOverlap, b}; }
    static Variant robust(long long b) { return {VariantKind::Robust, b}; }

    bool valid() const {
        return budget >= (kind == VariantKind::LocalOverlap ? 1 : 0);
    }
};

/// Color sets per node plus the deleted-node set (robust only). Deleted
/// nodes count as carrying every color; their `colors` entry is ignored.
struct ColorAssignment {
    std::vector<std::vector<ColorId>> colors;  // [1..n], each sorted ascending
    std::vector<NodeId> deleted;               // sorted ascending

    explicit ColorAssignment(int n = 0) : colors(n + 1) {}

    int num_nodes() const { return static_cast<int>(colors.size()) - 1; }
    bool has_color(NodeId v, ColorId c) const;
    bool is_deleted(NodeId v) const;
    void add_color(NodeId v, ColorId c);  // keeps the list sorted, ignores duplicates
};

struct FeasibilityResult {
    bool ok = true;
    std::string violation;  // empty when ok
};

FeasibilityResult check_feasible(const Variant& variant, const ColorAssignment& a);

/// Budget consumed by an assignment, in the variant's own units:
/// LocalOverlap -> max colors on any node, GlobalOverlap -> total colors
/// beyond one per node, Robust -> number of deleted nodes.
long long budget_used(const Variant& variant, const ColorAssignment& a);

}  // namespace ecc
