#include <cmath>
#include <sstream>

#include "doctest.h"

#include "ecc/exact.hpp"
#include "ecc/lp_model.hpp"
#include "ecc/simplex.hpp"
#include "test_util.hpp"

using namespace ecc;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

LpVariable make_var(double lower, double upper, double objective) {
    LpVariable v;
    v.lower = lower;
    v.upper = upper;
    v.objective = objective;
    return v;
}

LpRow make_row(double lower, double upper, std::vector<std::pair<int, double>> coeffs) {
    LpRow r;
    r.lower = lower;
    r.upper = upper;
    r.coeffs = std::move(coeffs);
    return r;
}

}  // namespace

TEST_CASE("simplex on small hand-built models") {
    SUBCASE("bounded maximization") {
        // min -x - y st x + y <= 1.5, x,y in [0,1]
        LpModel model;
        model.vars = {make_var(0, 1, -1), make_var(0, 1, -1)};
        model.rows = {make_row(-kInf, 1.5, {{0, 1}, {1, 1}})};
        const auto res = solve_simplex(model);
        CHECK(res.status == SolveStatus::Optimal);
        CHECK(res.objective == doctest::Approx(-1.5).epsilon(1e-9));
    }
    SUBCASE("infeasible") {
        LpModel model;
        model.vars = {make_var(0, 1, 1)};
        model.rows = {make_row(2.0, kInf, {{0, 1}})};
        CHECK(solve_simplex(model).status == SolveStatus::Infeasible);
    }
    SUBCASE("unbounded") {
        LpModel model;
        model.vars = {make_var(0, kInf, -1)};
        const auto res = solve_simplex(model);
        CHECK(res.status == SolveStatus::Unbounded);
    }
    SUBCASE("equality row") {
        // min x + 2y st x + y = 1
        LpModel model;
        model.vars = {make_var(0, 1, 1), make_var(0, 1, 2)};
        model.rows = {make_row(1.0, 1.0, {{0, 1}, {1, 1}})};
        const auto res = solve_simplex(model);
        CHECK(res.status == SolveStatus::Optimal);
        CHECK(res.objective == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(res.x[0] == doctest::Approx(1.0));
    }
    SUBCASE("degenerate rows") {
        LpModel model;
        model.vars = {make_var(0, 1, -1)};
        model.rows = {make_row(-kInf, 0.0, {{0, 1}}), make_row(-kInf, 0.0, {{0, 1}})};
        const auto res = solve_simplex(model);
        CHECK(res.status == SolveStatus::Optimal);
        CHECK(res.objective == doctest::Approx(0.0));
    }
    SUBCASE("negative lower bounds") {
        // min x + y st x + y >= -1, x,y in [-2,2]
        LpModel model;
        model.vars = {make_var(-2, 2, 1), make_var(-2, 2, 1)};
        model.rows = {make_row(-1.0, kInf, {{0, 1}, {1, 1}})};
        const auto res = solve_simplex(model);
        CHECK(res.status == SolveStatus::Optimal);
        CHECK(res.objective == doctest::Approx(-1.0).epsilon(1e-9));
    }
}

TEST_CASE("model shape for instance A local") {
    const auto h = testutil::instance_a();
    const auto model = build_lp(h, Variant::local(1));
    CHECK(model.num_vars() == 8);  // 3 edges + 5 incident node-color pairs
    int node_sums = 0, coverage = 0, budget = 0;
    for (const auto& row : model.rows) {
        if (row.kind == LpRow::Kind::NodeSum) ++node_sums;
        if (row.kind == LpRow::Kind::Coverage) ++coverage;
        if (row.kind == LpRow::Kind::Budget) ++budget;
    }
    CHECK(node_sums == 3);
    CHECK(coverage == 7);
    CHECK(budget == 0);
}

TEST_CASE("model shape for instance B robust") {
    const auto h = testutil::instance_b();
    const auto model = build_lp(h, Variant::robust(1));
    int deletions = 0;
    for (const auto& var : model.vars)
        if (var.role == VarRole::Deletion) ++deletions;
    CHECK(deletions == 4);
    const auto& last = model.rows.back();
    CHECK(last.kind == LpRow::Kind::Budget);
    CHECK(last.upper == 1.0);
    CHECK(last.coeffs.size() == 4);
}

TEST_CASE("global budget zero pins overlaps through the budget row") {
    const auto h = testutil::instance_a();
    const auto model = build_lp(h, Variant::global(0));
    const auto sol = solve_lp(model);
    REQUIRE(sol.status == SolveStatus::Optimal);
    for (NodeId v = 1; v <= 3; ++v) CHECK(sol.overlap_y[v] == doctest::Approx(0.0));
}

TEST_CASE("robust relaxation of instance B has value zero") {
    const auto h = testutil::instance_b();
    const auto sol = solve_lp(build_lp(h, Variant::robust(1)));
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(std::abs(sol.objective) <= 1e-6);
    // any zero-objective solution is forced to z_2 = z_3 = 1/2 and
    // x_2^c = x_3^c = 1/2
    CHECK(sol.deletion_z[2] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(sol.deletion_z[3] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(sol.node_color_value(2, 1) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(sol.node_color_value(3, 2) == doctest::Approx(0.5).epsilon(1e-6));
    // while the exact optimum makes a mistake
    CHECK(brute_force_optimum(h, Variant::robust(1)).mistakes == 1);
}

TEST_CASE("local bounds on instance A") {
    const auto h = testutil::instance_a();
    CHECK(lp_lower_bound(h, Variant::local(1)) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(lp_lower_bound(h, Variant::local(2)) == doctest::Approx(0.0));
    // budget beyond every chromatic degree: zero-mistake coloring feasible
    CHECK(lp_lower_bound(h, Variant::local(3)) == doctest::Approx(0.0));
}

TEST_CASE("single edge instances") {
    const auto h = build_hypergraph({{1, {1}}}, 1, 1);
    CHECK(lp_lower_bound(h, Variant::local(1)) == doctest::Approx(0.0));
    CHECK(lp_lower_bound(h, Variant::robust(0)) == doctest::Approx(0.0));
}

TEST_CASE("bound and sandwich properties on the random suite") {
    const auto suite = testutil::random_suite(30, 0xF00D);
    for (const auto& h : suite) {
        for (int kind = 0; kind < 3; ++kind) {
            double previous = kInf;
            for (long long b = (kind == 0 ? 1 : 0); b <= 3; ++b) {
                const Variant variant{static_cast<VariantKind>(kind), b};
                const double bound = lp_lower_bound(h, variant);
                CHECK(bound <= previous + 1e-6);  // monotone in the budget
                previous = bound;
                CHECK(bound >= -1e-9);
                CHECK(bound <=
                      static_cast<double>(brute_force_optimum(h, variant).mistakes) + 1e-6);
            }
        }
    }
}

TEST_CASE("sparsified and full models agree") {
    const auto suite = testutil::random_suite(15, 0x5EED);
    for (const auto& h : suite) {
        for (const Variant& variant :
             {Variant::local(1), Variant::local(2), Variant::global(0), Variant::global(2),
              Variant::robust(1)}) {
            const auto sparse = solve_lp(build_lp(h, variant));
            const auto full = solve_lp(testutil::build_lp_full(h, variant));
            REQUIRE(sparse.status == SolveStatus::Optimal);
            REQUIRE(full.status == SolveStatus::Optimal);
            CHECK(sparse.objective == doctest::Approx(full.objective).epsilon(1e-6));
        }
    }
}

TEST_CASE("solver is deterministic") {
    const auto h = testutil::instance_b();
    const auto model = build_lp(h, Variant::robust(1));
    const auto first = solve_lp(model);
    const auto second = solve_lp(model);
    CHECK(first.iterations == second.iterations);
    CHECK(first.values == second.values);
}

TEST_CASE("LP text dump") {
    const auto h = testutil::instance_a();
    const auto model = build_lp(h, Variant::local(1));
    std::ostringstream out;
    write_lp_format(out, model);
    const std::string text = out.str();
    CHECK(text.find("Minimize") != std::string::npos);
    CHECK(text.find("x_e1 + x_e2 + x_e3") != std::string::npos);
    CHECK(text.find("ns_v2: x_v2_c1 + x_v2_c2 >= 1") != std::string::npos);
    CHECK(text.find("cov_e1_v1: x_v1_c1 - x_e1 <= 0") != std::string::npos);
    CHECK(text.find("0 <= x_e1 <= 1") != std::string::npos);
    CHECK(text.find("End") != std::string::npos);
}
