#include <sstream>

#include "doctest.h"

#include "ecc/evaluate.hpp"
#include "ecc/greedy.hpp"
#include "test_util.hpp"

using namespace ecc;

TEST_CASE("greedy local on instance A") {
    const auto h = testutil::instance_a();

    auto res = greedy_local(h, 1);
    CHECK(res.assignment.colors[1] == std::vector<ColorId>{1});
    CHECK(res.assignment.colors[2] == std::vector<ColorId>{1});
    CHECK(res.assignment.colors[3] == std::vector<ColorId>{1});  // tie broken to color 1
    CHECK(evaluate(h, res.assignment).mistakes == 1);

    res = greedy_local(h, 2);
    CHECK(res.assignment.colors[2] == std::vector<ColorId>{1, 2});
    CHECK(res.assignment.colors[3] == std::vector<ColorId>{1, 2});
    CHECK(evaluate(h, res.assignment).mistakes == 0);
}

TEST_CASE("greedy local with budget covering all chromatic degrees") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto h = testutil::random_instance(rng);
        int max_dchi = 0;
        for (NodeId v = 1; v <= h.num_nodes(); ++v)
            max_dchi = std::max(max_dchi, h.chromatic_degree(v));
        const auto res = greedy_local(h, std::max(1, max_dchi));
        CHECK(evaluate(h, res.assignment).mistakes == 0);
    }
}

TEST_CASE("greedy global on instance A") {
    const auto h = testutil::instance_a();
    const auto res = greedy_global(h, 2);
    // gain 1 ties between nodes 2 and 3; node 2 wins, then node 3
    REQUIRE(res.trace.steps.size() == 2);
    CHECK(res.trace.steps[0].node == 2);
    CHECK(res.trace.steps[0].color == 2);
    CHECK(res.trace.steps[1].node == 3);
    CHECK(evaluate(h, res.assignment).mistakes == 0);
    CHECK(res.trace.surplus_budget == 0);
}

TEST_CASE("greedy global with zero budget is the favorite-color assignment") {
    const auto h = testutil::instance_a();
    const auto res = greedy_global(h, 0);
    for (NodeId v = 1; v <= 3; ++v)
        CHECK(res.assignment.colors[v] == std::vector<ColorId>{h.favorite_color(v)});
}

TEST_CASE("greedy global skips zero-gain additions") {
    const auto h = build_hypergraph({{1, {1, 2}}, {1, {2, 3}}}, 3, 2);  // monochromatic
    const auto res = greedy_global(h, 5);
    CHECK(res.trace.steps.empty());
    CHECK(res.trace.surplus_budget == 5);
    CHECK(budget_used(Variant::global(5), res.assignment) == 0);
}

TEST_CASE("greedy robust on instance A") {
    const auto h = testutil::instance_a();
    const auto res = greedy_robust(h, 1);
    CHECK(res.assignment.deleted == std::vector<NodeId>{2});  // gain 1, id tie against node 3
    CHECK(evaluate(h, res.assignment).mistakes == 1);
}

TEST_CASE("greedy robust deletes a rainbow star center") {
    // five edges of distinct colors through node 1
    std::vector<Edge> edges;
    for (ColorId c = 1; c <= 5; ++c) edges.push_back({c, {1, static_cast<NodeId>(c + 1)}});
    const auto h = build_hypergraph(std::move(edges), 6, 5);
    const auto res = greedy_robust(h, 1);
    CHECK(res.assignment.deleted == std::vector<NodeId>{1});
    CHECK(evaluate(h, res.assignment).mistakes == 0);
}

TEST_CASE("greedy robust with zero budget keeps favorites") {
    const auto h = testutil::instance_a();
    const auto res = greedy_robust(h, 0);
    CHECK(res.assignment.deleted.empty());
    for (NodeId v = 1; v <= 3; ++v) CHECK(res.assignment.colors[v].size() == 1);
}

TEST_CASE("greedy outputs satisfy their variant constraints") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto h = testutil::random_instance(rng);
        for (long long b = 1; b <= 3; ++b)
            CHECK(check_feasible(Variant::local(b), greedy_local(h, b).assignment).ok);
        for (long long b = 0; b <= 3; ++b) {
            CHECK(check_feasible(Variant::global(b), greedy_global(h, b).assignment).ok);
            CHECK(check_feasible(Variant::robust(b), greedy_robust(h, b).assignment).ok);
        }
    }
}

TEST_CASE("greedy minimizes the linear objective") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto h = testutil::random_instance(rng);
        for (long long b = 1; b <= 3; ++b) {
            const auto res = greedy_local(h, b);
            CHECK(evaluate(h, res.assignment).linear_penalty ==
                  testutil::linear_objective_minimum(h, Variant::local(b)));
        }
        for (long long b = 0; b <= 3; ++b) {
            const auto g = greedy_global(h, b);
            CHECK(evaluate(h, g.assignment).linear_penalty ==
                  testutil::linear_objective_minimum(h, Variant::global(b)));
            const auto r = greedy_robust(h, b);
            CHECK(evaluate(h, r.assignment).linear_penalty ==
                  testutil::linear_objective_minimum(h, Variant::robust(b)));
        }
    }
}

TEST_CASE("trace gains sum to the linear improvement") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const auto h = testutil::random_instance(rng);

        const auto global = greedy_global(h, 3);
        const auto base = greedy_global(h, 0);
        long long gains = 0, last = std::numeric_limits<long long>::max();
        for (const auto& s : global.trace.steps) {
            gains += s.errors_fixed;
            CHECK(s.errors_fixed <= last);  // non-increasing
            last = s.errors_fixed;
        }
        CHECK(evaluate(h, base.assignment).linear_penalty - gains ==
              evaluate(h, global.assignment).linear_penalty);

        const auto robust = greedy_robust(h, 3);
        gains = 0;
        last = std::numeric_limits<long long>::max();
        for (const auto& s : robust.trace.steps) {
            gains += s.errors_fixed;
            CHECK(s.errors_fixed <= last);
            last = s.errors_fixed;
        }
        CHECK(evaluate(h, base.assignment).linear_penalty - gains ==
              evaluate(h, robust.assignment).linear_penalty);
    }
}

TEST_CASE("aligned global budget dominates local") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const auto h = testutil::random_instance(rng);
        for (long long b = 1; b <= 3; ++b) {
            const auto local = greedy_local(h, b);
            const auto global = greedy_global(h, (b - 1) * h.num_nodes());
            CHECK(evaluate(h, global.assignment).linear_penalty <=
                  evaluate(h, local.assignment).linear_penalty);
        }
    }
}

TEST_CASE("trace CSV format") {
    const auto h = testutil::instance_a();
    const auto res = greedy_global(h, 1);
    std::ostringstream out;
    write_trace_csv(out, res.trace);
    CHECK(out.str() == "step,node,action,gain\n1,2,add-color-2,1\n");
}
