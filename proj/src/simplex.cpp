#include "ecc/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ecc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum NbState : std::uint8_t { kAtLower = 0, kAtUpper = 1, kFree = 2 };

// Bounded-variable simplex over the equality system [A | -I | D] x = 0:
// one logical variable per row carrying the row bounds, plus phase-1
// artificials for rows whose initial activity falls outside them. The basis
// inverse is kept explicitly (dense, row-major) and refactorized
// periodically by Gauss-Jordan elimination with partial pivoting.
class Simplex {
public:
    Simplex(const LpModel& model, const SimplexOptions& opt) : opt_(opt) {
        ns_ = model.num_vars();
        m_ = model.num_rows();
        cols_.resize(ns_ + m_);
        lb_.resize(ns_ + m_);
        ub_.resize(ns_ + m_);
        cost_.assign(ns_ + m_, 0.0);
        for (int j = 0; j < ns_; ++j) {
            lb_[j] = model.vars[j].lower;
            ub_[j] = model.vars[j].upper;
            cost_[j] = model.vars[j].objective;
        }
        for (int i = 0; i < m_; ++i) {
            for (const auto& [j, a] : model.rows[i].coeffs) cols_[j].emplace_back(i, a);
            cols_[ns_ + i].emplace_back(i, -1.0);
            lb_[ns_ + i] = model.rows[i].lower;
            ub_[ns_ + i] = model.rows[i].upper;
        }
    }

    SimplexResult run() {
        setup();
        SimplexResult res;
        if (naux_ > 0) {
            std::vector<double> phase1_cost(total(), 0.0);
            for (int j = ns_ + m_; j < total(); ++j) phase1_cost[j] = 1.0;
            SolveStatus st = run_phase(phase1_cost);
            if (st != SolveStatus::Optimal) {
                res.status = st;
                return finish(res);
            }
            double infeasibility = 0.0;
            for (int j = ns_ + m_; j < total(); ++j) infeasibility += x_[j];
            if (infeasibility > 1e-7) {
                res.status = SolveStatus::Infeasible;
                return finish(res);
            }
            for (int j = ns_ + m_; j < total(); ++j) {
                ub_[j] = 0.0;  // pin artificials; fixed variables never price in
                if (pos_in_basis_[j] < 0) {
                    x_[j] = 0.0;
                    nb_state_[j] = kAtLower;
                }
            }
        }
        res.status = run_phase(cost_);
        if (res.status == SolveStatus::Optimal) refactor();  // polish basic values
        return finish(res);
    }

private:
    int total() const { return ns_ + m_ + naux_; }

    SimplexResult finish(SimplexResult res) {
        res.x.assign(x_.begin(), x_.begin() + ns_);
        res.objective = 0.0;
        for (int j = 0; j < ns_; ++j) res.objective += cost_[j] * x_[j];
        res.iterations = iterations_;
        res.basis_changes = basis_changes_;
        return res;
    }

    void setup() {
        // nonbasic placement for structurals
        x_.assign(ns_ + m_, 0.0);
        nb_state_.assign(ns_ + m_, kAtLower);
        for (int j = 0; j < ns_; ++j) {
            const bool prefer_upper =
                opt_.start_at_upper && (*opt_.start_at_upper)[static_cast<size_t>(j)];
            if (prefer_upper && std::isfinite(ub_[j])) {
                x_[j] = ub_[j];
                nb_state_[j] = kAtUpper;
            } else if (std::isfinite(lb_[j])) {
                x_[j] = lb_[j];
                nb_state_[j] = kAtLower;
            } else if (std::isfinite(ub_[j])) {
                x_[j] = ub_[j];
                nb_state_[j] = kAtUpper;
            } else {
                x_[j] = 0.0;
                nb_state_[j] = kFree;
            }
        }

        std::vector<double> activity(m_, 0.0);
        for (int j = 0; j < ns_; ++j) {
            if (x_[j] == 0.0) continue;
            for (const auto& [i, a] : cols_[j]) activity[i] += a * x_[j];
        }

        basis_.assign(m_, -1);
        std::vector<double> diag(m_, -1.0);  // basis column for row i is diag[i] * e_i
        for (int i = 0; i < m_; ++i) {
            const int logical = ns_ + i;
            if (activity[i] >= lb_[logical] - opt_.feasibility_tol &&
                activity[i] <= ub_[logical] + opt_.feasibility_tol) {
                basis_[i] = logical;
                x_[logical] = activity[i];
                continue;
            }
            const double clamped = activity[i] > ub_[logical] ? ub_[logical] : lb_[logical];
            x_[logical] = clamped;
            nb_state_[logical] = activity[i] > ub_[logical] ? kAtUpper : kAtLower;
            const double d = clamped - activity[i] > 0 ? 1.0 : -1.0;
            cols_.push_back({{i, d}});
            lb_.push_back(0.0);
            ub_.push_back(kInf);
            cost_.push_back(0.0);
            x_.push_back((clamped - activity[i]) / d);
            nb_state_.push_back(kAtLower);
            basis_[i] = ns_ + m_ + naux_;
            diag[i] = d;
            ++naux_;
        }

        pos_in_basis_.assign(total(), -1);
        for (int i = 0; i < m_; ++i) pos_in_basis_[basis_[i]] = i;

        binv_.assign(static_cast<size_t>(m_) * m_, 0.0);
        for (int i = 0; i < m_; ++i) binv_[static_cast<size_t>(i) * m_ + i] = 1.0 / diag[i];

        y_.assign(m_, 0.0);
        w_.assign(m_, 0.0);
        pivots_since_refactor_ = 0;
    }

    SolveStatus run_phase(const std::vector<double>& cost) {
        bool bland = false;
        int no_improvement = 0;
        while (true) {
            if (iterations_ >= opt_.max_iterations) return SolveStatus::IterationLimit;
            ++iterations_;
            if (pivots_since_refactor_ >= opt_.refactor_every) refactor();

            btran(cost);
            const auto [q, dq] = price(cost, bland);
            if (q < 0) return SolveStatus::Optimal;
            ftran(q);

            const int dir = nb_state_[q] == kAtUpper ? -1 : (dq < 0 ? +1 : -1);
            const auto step = ratio_test(q, dir, bland);
            if (step.unbounded) return SolveStatus::Unbounded;
            if (step.leaving_pos >= 0 && std::abs(w_[step.leaving_pos]) < opt_.pivot_tol &&
                pivots_since_refactor_ > 0) {
                refactor();  // retry the iteration on fresh numerics
                continue;
            }

            apply_step(q, dir, step);

            const double improvement = std::abs(dq) * step.delta;
            if (improvement > 1e-12) {
                no_improvement = 0;
            } else if (++no_improvement > opt_.stall_limit) {
                bland = true;
            }
        }
    }

    void btran(const std::vector<double>& cost) {
        std::fill(y_.begin(), y_.end(), 0.0);
        for (int p = 0; p < m_; ++p) {
            const double cb = cost[basis_[p]];
            if (cb == 0.0) continue;
            const double* row = &binv_[static_cast<size_t>(p) * m_];
            for (int i = 0; i < m_; ++i) y_[i] += cb * row[i];
        }
    }

    double reduced_cost(const std::vector<double>& cost, int j) const {
        double d = cost[j];
        for (const auto& [i, a] : cols_[j]) d -= y_[i] * a;
        return d;
    }

    std::pair<int, double> price(const std::vector<double>& cost, bool bland) const {
        int best = -1;
        double best_d = 0.0, best_score = opt_.optimality_tol;
        for (int j = 0; j < total(); ++j) {
            if (pos_in_basis_[j] >= 0) continue;
            if (ub_[j] - lb_[j] <= opt_.feasibility_tol && std::isfinite(lb_[j])) continue;
            const double d = reduced_cost(cost, j);
            const NbState s = static_cast<NbState>(nb_state_[j]);
            const bool eligible = (s != kAtUpper && d < -opt_.optimality_tol) ||
                                  (s != kAtLower && d > opt_.optimality_tol);
            if (!eligible) continue;
            if (bland) return {j, d};
            if (std::abs(d) > best_score) {
                best_score = std::abs(d);
                best = j;
                best_d = d;
            }
        }
        return {best, best_d};
    }

    void ftran(int q) {
        const auto& col = cols_[q];
        for (int r = 0; r < m_; ++r) {
            const double* row = &binv_[static_cast<size_t>(r) * m_];
            double s = 0.0;
            for (const auto& [i, a] : col) s += row[i] * a;
            w_[r] = s;
        }
    }

    struct Step {
        double delta = 0.0;
        int leaving_pos = -1;  // -1 = bound flip
        bool leaving_to_upper = false;
        bool unbounded = false;
    };

    Step ratio_test(int q, int dir, bool bland) const {
        Step best;
        best.delta = ub_[q] - lb_[q];  // bound-to-bound flip, +inf when unbounded range
        double best_rate = 0.0;
        for (int p = 0; p < m_; ++p) {
            const double rate = -dir * w_[p];
            if (std::abs(rate) <= 1e-11) continue;
            const int j = basis_[p];
            double limit;
            bool to_upper;
            if (rate > 0) {
                if (!std::isfinite(ub_[j])) continue;
                limit = (ub_[j] - x_[j]) / rate;
                to_upper = true;
            } else {
                if (!std::isfinite(lb_[j])) continue;
                limit = (lb_[j] - x_[j]) / rate;
                to_upper = false;
            }
            limit = std::max(limit, 0.0);
            bool take;
            if (limit < best.delta - 1e-9) {
                take = true;
            } else if (limit <= best.delta + 1e-9 && best.leaving_pos >= 0) {
                take = bland ? j < basis_[best.leaving_pos] : std::abs(rate) > std::abs(best_rate);
            } else {
                take = best.leaving_pos < 0 && limit < best.delta;
            }
            if (take) {
                best.delta = std::min(best.delta, limit);
                best.leaving_pos = p;
                best.leaving_to_upper = to_upper;
                best_rate = rate;
            }
        }
        if (best.leaving_pos < 0 && !std::isfinite(best.delta)) best.unbounded = true;
        return best;
    }

    void apply_step(int q, int dir, const Step& step) {
        const double delta = step.delta;
        if (delta != 0.0) {
            for (int p = 0; p < m_; ++p) {
                const double rate = -dir * w_[p];
                if (rate != 0.0) x_[basis_[p]] += rate * delta;
            }
        }
        if (step.leaving_pos < 0) {  // bound flip
            nb_state_[q] = nb_state_[q] == kAtUpper ? kAtLower : kAtUpper;
            x_[q] = nb_state_[q] == kAtUpper ? ub_[q] : lb_[q];
            return;
        }

        const int r = step.leaving_pos;
        const int leaving = basis_[r];
        x_[leaving] = step.leaving_to_upper ? ub_[leaving] : lb_[leaving];
        nb_state_[leaving] = step.leaving_to_upper ? kAtUpper : kAtLower;
        x_[q] = (nb_state_[q] == kAtUpper ? ub_[q] : nb_state_[q] == kAtLower ? lb_[q] : 0.0) +
                dir * delta;

        const double piv = w_[r];
        double* prow = &binv_[static_cast<size_t>(r) * m_];
        const double inv = 1.0 / piv;
        for (int i = 0; i < m_; ++i) prow[i] *= inv;
#pragma omp parallel for schedule(static)
        for (int p = 0; p < m_; ++p) {
            if (p == r) continue;
            const double f = w_[p];
            if (f == 0.0) continue;
            double* row = &binv_[static_cast<size_t>(p) * m_];
            for (int i = 0; i < m_; ++i) row[i] -= f * prow[i];
        }

        pos_in_basis_[leaving] = -1;
        pos_in_basis_[q] = r;
        basis_[r] = q;
        ++pivots_since_refactor_;
        ++basis_changes_;
    }

    // Rebuilds the inverse from the basis columns and recomputes basic values
    // with one step of iterative refinement.
    void refactor() {
        std::vector<double> bmat(static_cast<size_t>(m_) * m_, 0.0);
        for (int p = 0; p < m_; ++p)
            for (const auto& [i, a] : cols_[basis_[p]]) bmat[static_cast<size_t>(i) * m_ + p] = a;

        std::fill(binv_.begin(), binv_.end(), 0.0);
        for (int i = 0; i < m_; ++i) binv_[static_cast<size_t>(i) * m_ + i] = 1.0;

        for (int k = 0; k < m_; ++k) {
            int pivot_row = k;
            double best = std::abs(bmat[static_cast<size_t>(k) * m_ + k]);
            for (int i = k + 1; i < m_; ++i) {
                const double cand = std::abs(bmat[static_cast<size_t>(i) * m_ + k]);
                if (cand > best) {
                    best = cand;
                    pivot_row = i;
                }
            }
            if (best < 1e-12) throw std::logic_error("singular basis in refactorization");
            if (pivot_row != k) {
                for (int c = 0; c < m_; ++c) {
                    std::swap(bmat[static_cast<size_t>(k) * m_ + c],
                              bmat[static_cast<size_t>(pivot_row) * m_ + c]);
                    std::swap(binv_[static_cast<size_t>(k) * m_ + c],
                              binv_[static_cast<size_t>(pivot_row) * m_ + c]);
                }
            }
            double* bk = &bmat[static_cast<size_t>(k) * m_];
            double* ik = &binv_[static_cast<size_t>(k) * m_];
            const double inv = 1.0 / bk[k];
            for (int c = 0; c < m_; ++c) {
                bk[c] *= inv;
                ik[c] *= inv;
            }
#pragma omp parallel for schedule(static)
            for (int i = 0; i < m_; ++i) {
                if (i == k) continue;
                double* bi = &bmat[static_cast<size_t>(i) * m_];
                const double f = bi[k];
                if (f == 0.0) continue;
                double* ii = &binv_[static_cast<size_t>(i) * m_];
                for (int c = 0; c < m_; ++c) {
                    bi[c] -= f * bk[c];
                    ii[c] -= f * ik[c];
                }
            }
        }

        recompute_basics();
        pivots_since_refactor_ = 0;
    }

    void recompute_basics() {
        std::vector<double> rhs(m_, 0.0);
        for (int j = 0; j < total(); ++j) {
            if (pos_in_basis_[j] >= 0 || x_[j] == 0.0) continue;
            for (const auto& [i, a] : cols_[j]) rhs[i] -= a * x_[j];
        }
        std::vector<double> xb(m_, 0.0);
        for (int p = 0; p < m_; ++p) {
            const double* row = &binv_[static_cast<size_t>(p) * m_];
            double s = 0.0;
            for (int i = 0; i < m_; ++i) s += row[i] * rhs[i];
            xb[p] = s;
        }
        // one refinement pass against the original columns
        std::vector<double> resid = rhs;
        for (int p = 0; p < m_; ++p)
            for (const auto& [i, a] : cols_[basis_[p]]) resid[i] -= a * xb[p];
        for (int p = 0; p < m_; ++p) {
            const double* row = &binv_[static_cast<size_t>(p) * m_];
            double s = 0.0;
            for (int i = 0; i < m_; ++i) s += row[i] * resid[i];
            x_[basis_[p]] = xb[p] + s;
        }
    }

    SimplexOptions opt_;
    int ns_ = 0, m_ = 0, naux_ = 0;
    std::vector<std::vector<std::pair<int, double>>> cols_;
    std::vector<double> lb_, ub_, cost_, x_, y_, w_;
    std::vector<double> binv_;
    std::vector<int> basis_, pos_in_basis_;
    std::vector<std::uint8_t> nb_state_;
    long long iterations_ = 0, basis_changes_ = 0;
    int pivots_since_refactor_ = 0;
};

}  // namespace

SimplexResult solve_simplex(const LpModel& model, const SimplexOptions& options) {
    return Simplex(model, options).run();
}

}  // namespace ecc
