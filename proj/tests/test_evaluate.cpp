#include "doctest.h"

#include "ecc/evaluate.hpp"
#include "test_util.hpp"

using namespace ecc;

namespace {

ColorAssignment make_assignment(int n, std::vector<std::vector<ColorId>> colors,
                                std::vector<NodeId> deleted = {}) {
    ColorAssignment a(n);
    for (int v = 1; v <= n; ++v) a.colors[v] = colors[v - 1];
    a.deleted = std::move(deleted);
    return a;
}

}  // namespace

TEST_CASE("evaluate instance A") {
    const auto h = testutil::instance_a();

    const auto all_one = make_assignment(3, {{1}, {1}, {1}});
    auto r = evaluate(h, all_one);
    CHECK(r.mistakes == 1);  // edge 2
    CHECK(r.linear_penalty == 2);
    CHECK(r.satisfied == 2);
    CHECK(r.edge_satisfied[1]);
    CHECK(!r.edge_satisfied[2]);
    CHECK(r.edge_satisfied[3]);

    const auto overlap = make_assignment(3, {{1}, {1, 2}, {1, 2}});
    r = evaluate(h, overlap);
    CHECK(r.mistakes == 0);
    CHECK(r.satisfied == 3);
    CHECK(r.unused_nodes == 0);
}

TEST_CASE("monochromatic instance is satisfied by its color") {
    const auto h = build_hypergraph({{1, {1, 2}}, {1, {2, 3}}}, 3, 2);
    const auto a = make_assignment(3, {{1}, {1}, {1}});
    CHECK(evaluate(h, a).mistakes == 0);
}

TEST_CASE("deleted nodes never cause mistakes") {
    const auto h = testutil::instance_b();
    // nodes 2 and 3 deleted: every remaining member matches its edge color
    auto a = make_assignment(4, {{1}, {}, {}, {2}}, {2, 3});
    const auto r = evaluate(h, a);
    CHECK(r.mistakes == 0);
    CHECK(r.unused_nodes == 0);
}

TEST_CASE("isolated nodes count as unused") {
    const auto h = build_hypergraph({{1, {1, 2}}}, 3, 1);
    const auto a = make_assignment(3, {{1}, {1}, {1}});
    CHECK(evaluate(h, a).unused_nodes == 1);
}

TEST_CASE("feasibility checks") {
    Variant local = Variant::local(1);
    auto a = make_assignment(3, {{1}, {1, 2}, {1}});
    auto res = check_feasible(local, a);
    CHECK(!res.ok);
    CHECK(res.violation == "node 2 has 2 > 1 colors");

    Variant global = Variant::global(1);
    CHECK(check_feasible(global, a).ok);  // one extra color

    auto b = make_assignment(3, {{1}, {1, 2}, {1, 2}});
    CHECK(!check_feasible(global, b).ok);  // two extras over budget 1

    Variant robust = Variant::robust(0);
    auto c = make_assignment(3, {{1}, {}, {1}}, {2});
    CHECK(!check_feasible(robust, c).ok);  // deletion with budget 0
    CHECK(check_feasible(Variant::robust(1), c).ok);
}

TEST_CASE("budget_used per variant") {
    auto a = make_assignment(3, {{1}, {1, 2}, {1}});
    CHECK(budget_used(Variant::local(2), a) == 2);   // max per node
    CHECK(budget_used(Variant::global(3), a) == 1);  // total extras
    auto b = make_assignment(3, {{1}, {}, {1}}, {2});
    CHECK(budget_used(Variant::robust(1), b) == 1);  // deletions
}

TEST_CASE("penalty sandwich and monotonicity") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const auto h = testutil::random_instance(rng);
        const int n = h.num_nodes();

        ColorAssignment a(n);
        std::uniform_int_distribution<int> color(1, h.num_colors());
        for (NodeId v = 1; v <= n; ++v) a.colors[v] = {static_cast<ColorId>(color(rng))};

        const auto r = evaluate(h, a);
        CHECK(r.mistakes + r.satisfied == h.num_edges());
        CHECK(r.mistakes <= r.linear_penalty);
        if (h.rank() > 0) CHECK(r.linear_penalty <= h.rank() * r.mistakes);

        // per-edge sandwich
        for (EdgeId e = 1; e <= h.num_edges(); ++e) {
            long long pen = 0;
            for (NodeId v : h.edge(e).members)
                if (!a.is_deleted(v) && !a.has_color(v, h.edge(e).color)) ++pen;
            if (r.edge_satisfied[e]) {
                CHECK(pen == 0);
            } else {
                CHECK(pen >= 1);
                CHECK(pen <= h.edge(e).size());
            }
        }

        // adding a color never increases mistakes
        ColorAssignment more = a;
        std::uniform_int_distribution<int> node(1, n);
        more.add_color(static_cast<NodeId>(node(rng)), static_cast<ColorId>(color(rng)));
        CHECK(evaluate(h, more).mistakes <= r.mistakes);

        // deleting a node never increases mistakes
        ColorAssignment del = a;
        del.deleted = {static_cast<NodeId>(node(rng))};
        CHECK(evaluate(h, del).mistakes <= r.mistakes);
    }
}
