#include "doctest.h"

#include "ecc/evaluate.hpp"
#include "ecc/lp_model.hpp"
#include "test_util.hpp"

using namespace ecc;

// The OpenMP kernels only use integer reductions and per-element writes, so
// they must agree bit-for-bit with the serial references at any thread
// count.

TEST_CASE("evaluate matches the serial reference") {
    std::mt19937_64 rng(0xD15C0);
    for (int trial = 0; trial < 60; ++trial) {
        const auto h = testutil::random_instance(rng);
        ColorAssignment a(h.num_nodes());
        std::uniform_int_distribution<int> color(1, h.num_colors());
        std::uniform_int_distribution<int> keep(0, 3);
        for (NodeId v = 1; v <= h.num_nodes(); ++v) {
            a.colors[v] = {static_cast<ColorId>(color(rng))};
            if (keep(rng) == 0) a.add_color(v, static_cast<ColorId>(color(rng)));
            if (keep(rng) == 0) a.deleted.push_back(v);
        }
        const auto parallel = evaluate(h, a);
        const auto serial = evaluate_serial(h, a);
        CHECK(parallel.mistakes == serial.mistakes);
        CHECK(parallel.satisfied == serial.satisfied);
        CHECK(parallel.linear_penalty == serial.linear_penalty);
        CHECK(parallel.unused_nodes == serial.unused_nodes);
        CHECK(parallel.edge_satisfied == serial.edge_satisfied);
    }
}

TEST_CASE("structure stats match the serial reference") {
    std::mt19937_64 rng(0xD15C1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto h = testutil::random_instance(rng);
        const auto parallel = structure_stats(h);
        const auto serial = structure_stats_serial(h);
        CHECK(parallel.max_non_dominant == serial.max_non_dominant);
        CHECK(parallel.mean_non_dominant == serial.mean_non_dominant);
        CHECK(parallel.median_non_dominant == serial.median_non_dominant);
        CHECK(parallel.frac_chromatic_gt1 == serial.frac_chromatic_gt1);
        CHECK(parallel.frac_nd_pct_ge_5 == serial.frac_nd_pct_ge_5);
        CHECK(parallel.frac_nd_pct_ge_10 == serial.frac_nd_pct_ge_10);
        for (NodeId v = 1; v <= h.num_nodes(); ++v) {
            CHECK(parallel.per_node[v].non_dominant_degree ==
                  serial.per_node[v].non_dominant_degree);
        }
    }
}

TEST_CASE("simplex runs are reproducible") {
    const auto suite = testutil::random_suite(10, 0xD15C2);
    for (const auto& h : suite) {
        for (const Variant& variant :
             {Variant::local(1), Variant::global(1), Variant::robust(1)}) {
            const auto model = build_lp(h, variant);
            const auto a = solve_lp(model);
            const auto b = solve_lp(model);
            CHECK(a.iterations == b.iterations);
            CHECK(a.objective == b.objective);  // bitwise, not approximate
            CHECK(a.values == b.values);
        }
    }
}
