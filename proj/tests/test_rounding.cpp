#include <cmath>

#include "doctest.h"

#include "ecc/exact.hpp"
#include "ecc/rounding.hpp"
#include "test_util.hpp"

using namespace ecc;

TEST_CASE("round_half") {
    CHECK(round_half(1.4, 0.5) == 1);
    CHECK(round_half(1.5, 0.5) == 2);  // fractional part not below the split
    CHECK(round_half(3.0, 0.2) == 3);
    CHECK(round_half(0.0, 0.9) == 0);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> xs(0.0, 10.0), deltas(0.05, 0.95);
    for (int i = 0; i < 2000; ++i) {
        const double x = xs(rng), d = deltas(rng);
        const double r = static_cast<double>(round_half(x, d));
        CHECK(r + d >= x - 1e-12);
        CHECK(r <= x + (1.0 - d) + 1e-12);
        CHECK(r <= x / d + 1e-12);
    }
}

TEST_CASE("parameter ranges") {
    const auto h = testutil::instance_a();
    const auto sol = solve_lp(build_lp(h, Variant::local(1)));
    CHECK_THROWS_AS(round_local(h, 1, sol, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(round_local(h, 1, sol, 1.0), std::invalid_argument);
    const auto rsol = solve_lp(build_lp(h, Variant::robust(1)));
    CHECK_THROWS_AS(round_robust(h, 1, rsol, 0.5), std::invalid_argument);
    const auto gsol = solve_lp(build_lp(h, Variant::global(1)));
    CHECK_THROWS_AS(round_global(h, 1, gsol, -0.1), std::invalid_argument);
}

TEST_CASE("preset promises") {
    const auto h = testutil::instance_a();

    const auto local = solve_lp(build_lp(h, Variant::local(2)));
    auto r = round_local(h, 2, local, rho_single_criteria(2));
    CHECK(r.certificate.promised_alpha == doctest::Approx(3.0));  // b + 1
    CHECK(r.certificate.promised_beta == doctest::Approx(1.0));
    r = round_local(h, 2, local, 0.5);
    CHECK(r.certificate.promised_alpha == doctest::Approx(2.0));
    CHECK(r.certificate.promised_beta == doctest::Approx(1.5));  // 2 - 1/b

    const auto global = solve_lp(build_lp(h, Variant::global(1)));
    const auto g = round_global(h, 1, global, 0.5);
    CHECK(g.certificate.promised_alpha == doctest::Approx(7.0));  // 2b + 5
    CHECK(g.certificate.promised_beta == doctest::Approx(2.0));

    const auto robust = solve_lp(build_lp(h, Variant::robust(1)));
    auto rb = round_robust(h, 1, robust, 1.0 / 3.0);
    CHECK(rb.certificate.promised_alpha == doctest::Approx(6.0));
    CHECK(rb.certificate.promised_beta == doctest::Approx(3.0));
    rb = round_robust(h, 1, robust, 0.25);
    CHECK(rb.certificate.promised_alpha == doctest::Approx(4.0));
    CHECK(rb.certificate.promised_beta == doctest::Approx(4.0));
}

TEST_CASE("integral local solution reproduces the coloring") {
    const auto h = testutil::instance_a();
    const auto sol = solve_lp(build_lp(h, Variant::local(2)));
    REQUIRE(std::abs(sol.objective) <= 1e-6);  // zero-mistake coloring exists
    const auto r = round_local(h, 2, sol, rho_single_criteria(2));
    CHECK(r.report.mistakes == 0);
    CHECK(r.certificate.observed_alpha == doctest::Approx(1.0));
    for (NodeId v = 1; v <= 3; ++v)
        CHECK(static_cast<long long>(r.assignment.colors[v].size()) <= 2);
}

TEST_CASE("robust rounding of the gap instance deletes the overlap") {
    const auto h = testutil::instance_b();
    const auto sol = solve_lp(build_lp(h, Variant::robust(1)));
    const auto r = round_robust(h, 1, sol, 1.0 / 3.0);
    CHECK(r.assignment.deleted == std::vector<NodeId>{2, 3});
    CHECK(r.report.mistakes == 0);
    CHECK(r.report.budget_used == 2);
    CHECK(r.certificate.observed_beta == doctest::Approx(2.0));
    CHECK(check_feasible(Variant::robust(2), r.assignment).ok);  // within the promised factor
}

TEST_CASE("fill step only helps") {
    const auto suite = testutil::random_suite(20, 0xF155);
    for (const auto& h : suite) {
        const auto sol = solve_lp(build_lp(h, Variant::local(1)));
        const auto bare = round_local(h, 1, sol, 0.5, false);
        const auto filled = round_local(h, 1, sol, 0.5, true);
        CHECK(filled.report.mistakes <= bare.report.mistakes);
        for (NodeId v = 1; v <= h.num_nodes(); ++v)
            CHECK(filled.assignment.colors[v].size() <= 1);  // threshold plus fill at b = 1
    }
}

TEST_CASE("certificates hold across presets on the random suite") {
    const auto suite = testutil::random_suite(40, 0xCE27);
    for (const auto& h : suite) {
        for (long long b = 1; b <= 3; ++b) {
            const auto sol = solve_lp(build_lp(h, Variant::local(b)));
            for (const double rho : {rho_single_criteria(b), 0.5}) {
                const auto r = round_local(h, b, sol, rho);  // throws if violated
                const long long cap =
                    static_cast<long long>(std::ceil(b / rho - 1e-9)) - 1;
                for (NodeId v = 1; v <= h.num_nodes(); ++v)
                    CHECK(static_cast<long long>(r.assignment.colors[v].size()) <= cap);
                CHECK(static_cast<double>(r.report.mistakes) <=
                      r.certificate.promised_alpha * r.certificate.lp_value + 1e-6);
            }
        }
        for (long long b = 0; b <= 3; ++b) {
            const auto gsol = solve_lp(build_lp(h, Variant::global(b)));
            const auto g = round_global(h, b, gsol, 0.5);
            CHECK(check_feasible(Variant::global(h.num_nodes() * 4), g.assignment).ok);
            long long extras = 0;
            for (NodeId v = 1; v <= h.num_nodes(); ++v) {
                const auto size = static_cast<long long>(g.assignment.colors[v].size());
                CHECK(size <= round_half(gsol.overlap_y[v], 0.5) + 1);
                extras += size - 1;
            }
            CHECK(static_cast<double>(extras) <= 2.0 * static_cast<double>(b) + 1e-9);

            const auto rsol = solve_lp(build_lp(h, Variant::robust(b)));
            for (const double eps : {1.0 / 3.0, 0.25}) {
                const auto r = round_robust(h, b, rsol, eps);
                CHECK(static_cast<double>(r.assignment.deleted.size()) <=
                      static_cast<double>(b) / eps + 1e-9);
                for (NodeId v = 1; v <= h.num_nodes(); ++v)
                    if (!r.assignment.is_deleted(v))
                        CHECK(r.assignment.colors[v].size() == 1);
            }
        }
    }
}
