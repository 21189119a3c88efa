// Compares the OpenMP kernels against their serial references on a large
// random instance, plus one LP solve at the bundled-dataset scale.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ecc/evaluate.hpp"
#include "ecc/greedy.hpp"
#include "ecc/hypergraph.hpp"
#include "ecc/lp_model.hpp"

using namespace ecc;

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto start = Clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - start)
                                  .count());
    }
    return best;
}

EdgeColoredHypergraph random_graph(int n, int m, int k, int rank, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> color(1, k), size(2, rank), node(1, n);
    std::vector<Edge> edges;
    edges.reserve(m);
    std::vector<std::uint8_t> used(n + 1, 0);
    for (int e = 0; e < m; ++e) {
        Edge edge;
        edge.color = color(rng);
        const int s = size(rng);
        while (static_cast<int>(edge.members.size()) < s) {
            const NodeId v = node(rng);
            if (!used[v]) {
                used[v] = 1;
                edge.members.push_back(v);
            }
        }
        for (NodeId v : edge.members) used[v] = 0;
        edges.push_back(std::move(edge));
    }
    return build_hypergraph(std::move(edges), n, k);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled\n");
#endif

    const auto h = random_graph(50000, 200000, 20, 8, 42);
    std::printf("instance: %d nodes, %d edges, rank %d\n", h.num_nodes(), h.num_edges(),
                h.rank());

    const auto assignment = greedy_global(h, h.num_nodes()).assignment;

    const double eval_serial = best_of(5, [&] { (void)evaluate_serial(h, assignment); });
    const double eval_parallel = best_of(5, [&] { (void)evaluate(h, assignment); });
    std::printf("evaluate:        serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
                eval_serial, eval_parallel, eval_serial / eval_parallel);

    const double stats_serial = best_of(5, [&] { (void)structure_stats_serial(h); });
    const double stats_parallel = best_of(5, [&] { (void)structure_stats(h); });
    std::printf("structure_stats: serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
                stats_serial, stats_parallel, stats_serial / stats_parallel);

    const auto small = random_graph(200, 300, 6, 4, 7);
    const double lp_ms = best_of(1, [&] {
        const auto sol = solve_lp(build_lp(small, Variant::global(100)));
        std::printf("lp: objective %.3f in %lld iterations\n", sol.objective, sol.iterations);
    });
    std::printf("lp solve (200 nodes, 300 edges): %.2f ms\n", lp_ms);
    return 0;
}
