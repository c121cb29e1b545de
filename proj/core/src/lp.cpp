#include "aos/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "aos/errors.hpp"
#include "aos/linalg.hpp"

namespace aos {

namespace {

constexpr double kCostTol = 1e-9;    // entering-column threshold
constexpr double kPivotTol = 1e-9;   // smallest usable pivot element
constexpr double kPhase1Tol = 1e-7;  // residual infeasibility allowed after phase 1

struct Tableau {
    int m = 0;       // constraint rows
    int n = 0;       // columns excluding rhs
    int art_begin = 0;  // first artificial column
    std::vector<double> t;  // (m + 2) x (n + 1); row m = phase-1 costs, m+1 = phase-2
    std::vector<int> basis;

    double& at(int i, int j) { return t[static_cast<size_t>(i) * (n + 1) + j]; }
    double& rhs(int i) { return at(i, n); }

    void pivot(int row, int col) {
        const double p = at(row, col);
        const double inv = 1.0 / p;
        for (int j = 0; j <= n; ++j) at(row, j) *= inv;
        at(row, col) = 1.0;
        for (int i = 0; i < m + 2; ++i) {
            if (i == row) continue;
            const double f = at(i, col);
            if (f == 0.0) continue;
            for (int j = 0; j <= n; ++j) at(i, j) -= f * at(row, j);
            at(i, col) = 0.0;
        }
        basis[row] = col;
    }
};

// Entering column for the given cost row, or -1 at optimality.
int entering_column(Tableau& tb, int cost_row, bool bland) {
    int best = -1;
    double best_val = -kCostTol;
    for (int j = 0; j < tb.n; ++j) {
        if (j >= tb.art_begin) continue;  // artificials never re-enter
        const double d = tb.at(cost_row, j);
        if (bland) {
            if (d < -kCostTol) return j;
        } else if (d < best_val) {
            best_val = d;
            best = j;
        }
    }
    return best;
}

// Leaving row by the minimum-ratio test. Among (near-)tied rows the largest
// pivot element wins, which keeps degenerate plateaus numerically stable;
// under Bland's rule the smallest basis index wins instead.
int leaving_row(Tableau& tb, int col, bool bland) {
    int best = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    double best_abs = 0.0;
    for (int i = 0; i < tb.m; ++i) {
        const double a = tb.at(i, col);
        if (a <= kPivotTol) continue;
        const double ratio = std::max(0.0, tb.rhs(i)) / a;
        if (best < 0) {
            best = i;
            best_ratio = ratio;
            best_abs = a;
            continue;
        }
        const double window = 1e-12 * (1.0 + best_ratio);
        const bool strictly_better = ratio < best_ratio - window;
        const bool tied = !strictly_better && ratio <= best_ratio + window;
        const bool tie_break =
            tied && (bland ? tb.basis[i] < tb.basis[best] : a > best_abs);
        if (strictly_better || tie_break) {
            best_ratio = std::min(ratio, best_ratio);
            best_abs = a;
            best = i;
        }
    }
    return best;
}

// Runs one simplex phase to optimality of `cost_row`. Returns iteration count.
int run_phase(Tableau& tb, int cost_row, int iter_cap) {
    int iters = 0;
    int stall = 0;
    bool bland = false;
    const int stall_limit = 4 * (tb.m + 16);
    double last_obj = -tb.at(cost_row, tb.n);
    while (true) {
        const int col = entering_column(tb, cost_row, bland);
        if (col < 0) break;
        const int row = leaving_row(tb, col, bland);
        if (row < 0)
            throw SolverError("simplex: unbounded direction in column " + std::to_string(col));
        tb.pivot(row, col);
        ++iters;
        if (iters > iter_cap)
            throw SolverError("simplex: iteration cap exceeded (" + std::to_string(iter_cap) +
                              ")");
        const double obj = -tb.at(cost_row, tb.n);
        if (obj < last_obj - 1e-12) {
            last_obj = obj;
            stall = 0;
            bland = false;
        } else if (++stall > stall_limit) {
            bland = true;  // degenerate plateau: Bland guarantees escape
        }
    }
    return iters;
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
    const int nv = problem.num_vars;
    if (static_cast<int>(problem.cost.size()) != nv)
        throw SolverError("lp: cost vector size mismatch");

    // Map active structural variables (fixed-to-zero columns are dropped and
    // reinserted as zeros afterwards).
    std::vector<char> fixed(nv, 0);
    for (int j : problem.fixed_zero) fixed[j] = 1;
    std::vector<int> col_of(nv, -1);
    std::vector<int> var_of;
    for (int j = 0; j < nv; ++j) {
        if (!fixed[j]) {
            col_of[j] = static_cast<int>(var_of.size());
            var_of.push_back(j);
        }
    }
    const int n_struct = static_cast<int>(var_of.size());

    // Pairs with a fixed left side reduce to 0 <= x, which always holds.
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : problem.leq_pairs) {
        if (fixed[a]) continue;
        if (fixed[b]) throw SolverError("lp: pair bound against a fixed variable");
        pairs.emplace_back(a, b);
    }

    const int n_eq = static_cast<int>(problem.eq_rows.size());
    const int n_pairs = static_cast<int>(pairs.size());
    const int m = n_eq + n_pairs;
    const int n_slack = n_pairs;
    const int n_total = n_struct + n_slack + n_eq;  // artificials only on eq rows

    Tableau tb;
    tb.m = m;
    tb.n = n_total;
    tb.art_begin = n_struct + n_slack;
    tb.t.assign(static_cast<size_t>(m + 2) * (n_total + 1), 0.0);
    tb.basis.assign(m, -1);

    // Pristine copy of the canonical system for the final refinement pass.
    std::vector<double> a0(static_cast<size_t>(m) * n_total, 0.0);
    std::vector<double> b0(m, 0.0);

    for (int i = 0; i < n_eq; ++i) {
        const auto& row = problem.eq_rows[i];
        double sign = problem.eq_rhs[i] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < nv; ++j) {
            if (col_of[j] < 0 || row[j] == 0.0) continue;
            tb.at(i, col_of[j]) = sign * row[j];
        }
        tb.at(i, tb.art_begin + i) = 1.0;
        tb.rhs(i) = sign * problem.eq_rhs[i];
        tb.basis[i] = tb.art_begin + i;
    }
    for (int k = 0; k < n_pairs; ++k) {
        const int i = n_eq + k;
        tb.at(i, col_of[pairs[k].first]) = 1.0;
        tb.at(i, col_of[pairs[k].second]) = -1.0;
        tb.at(i, n_struct + k) = 1.0;
        tb.rhs(i) = 0.0;
        tb.basis[i] = n_struct + k;
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n_total; ++j) a0[static_cast<size_t>(i) * n_total + j] = tb.at(i, j);
        b0[i] = tb.rhs(i);
    }

    // Phase-1 cost row: minimize the sum of artificials, reduced against the
    // starting basis by subtracting every equality row.
    for (int i = 0; i < n_eq; ++i) tb.at(m, tb.art_begin + i) = 1.0;
    for (int i = 0; i < n_eq; ++i)
        for (int j = 0; j <= n_total; ++j) tb.at(m, j) -= tb.at(i, j);

    // Phase-2 cost row (slacks and artificials cost nothing; the starting
    // basis has zero cost, so this is already in reduced form).
    for (int j = 0; j < nv; ++j)
        if (col_of[j] >= 0) tb.at(m + 1, col_of[j]) = problem.cost[j];

    const int iter_cap = 2000 + 60 * (m + n_total);
    int iters = run_phase(tb, m, iter_cap);

    const double phase1 = -tb.at(m, tb.n);
    if (phase1 > kPhase1Tol)
        throw SolverError("lp: infeasible (phase-1 residual " + std::to_string(phase1) + ")");

    // Kick remaining artificials out of the basis where possible; rows that
    // offer no pivot are redundant and keep their zero-valued artificial.
    for (int i = 0; i < m; ++i) {
        if (tb.basis[i] < tb.art_begin) continue;
        for (int j = 0; j < tb.art_begin; ++j) {
            if (std::abs(tb.at(i, j)) > 1e-7) {
                tb.pivot(i, j);
                break;
            }
        }
    }

    iters += run_phase(tb, m + 1, iter_cap);

    // Re-solve the optimal basis against the original data with one round of
    // iterative refinement; the pivoted tableau accumulates drift.
    std::vector<double> xb(m, 0.0);
    {
        std::vector<double> bmat(static_cast<size_t>(m) * m);
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k)
                bmat[static_cast<size_t>(i) * m + k] = a0[static_cast<size_t>(i) * n_total + tb.basis[k]];
        const linalg::LuFactors lu = linalg::lu_factor(bmat, m);
        if (!lu.singular) {
            xb = linalg::lu_solve(lu, b0);
            std::vector<double> resid(m);
            for (int i = 0; i < m; ++i) {
                double acc = b0[i];
                for (int k = 0; k < m; ++k)
                    acc -= a0[static_cast<size_t>(i) * n_total + tb.basis[k]] * xb[k];
                resid[i] = acc;
            }
            const std::vector<double> dx = linalg::lu_solve(lu, std::move(resid));
            for (int i = 0; i < m; ++i) xb[i] += dx[i];
        } else {
            for (int i = 0; i < m; ++i) xb[i] = tb.rhs(i);
        }
    }

    LpSolution sol;
    sol.iterations = iters;
    sol.x.assign(nv, 0.0);
    for (int i = 0; i < m; ++i) {
        const int c = tb.basis[i];
        if (c < n_struct) sol.x[var_of[c]] = std::max(0.0, xb[i]);
    }
    sol.objective = 0.0;
    for (int j = 0; j < nv; ++j) sol.objective += problem.cost[j] * sol.x[j];

    double residual = 0.0;
    for (int i = 0; i < n_eq; ++i) {
        double acc = -problem.eq_rhs[i];
        const auto& row = problem.eq_rows[i];
        for (int j = 0; j < nv; ++j) acc += row[j] * sol.x[j];
        residual = std::max(residual, std::abs(acc));
    }
    for (auto [a, b] : problem.leq_pairs)
        residual = std::max(residual, sol.x[a] - sol.x[b]);
    sol.max_residual = residual;
    return sol;
}

}  // namespace aos
