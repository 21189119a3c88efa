#pragma once

#include <vector>

#include "ecc/lp_model.hpp"

namespace ecc {

struct SimplexOptions {
    double feasibility_tol = 1e-9;
    double optimality_tol = 1e-9;
    double pivot_tol = 1e-8;
    long long max_iterations = 500000;
    int refactor_every = 256;   // basis-change pivots between refactorizations
    int stall_limit = 1000;     // iterations without improvement before Bland's rule
    // Initial bound for each structural variable (true = upper). Defaults to
    // the finite lower bound, else the finite upper bound, else zero. A
    // placement that starts feasible skips phase 1.
    const std::vector<bool>* start_at_upper = nullptr;
};

struct SimplexResult {
    SolveStatus status = SolveStatus::Optimal;
    double objective = 0.0;            // structural objective value
    std::vector<double> x;             // structural variable values
    long long iterations = 0;
    long long basis_changes = 0;
};

/// Bounded-variable two-phase revised simplex with a dense explicit basis
/// inverse, Dantzig pricing, and Bland's rule after stalls. Deterministic
/// for a fixed model: pricing and ratio ties break on variable index, and
/// the parallel basis update is bitwise independent of the thread count.
SimplexResult solve_simplex(const LpModel& model, const SimplexOptions& options = {});

}  // namespace ecc
