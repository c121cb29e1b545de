#pragma once

#include <utility>
#include <vector>

namespace aos {

/// Dense linear program: minimize cost . x subject to
///   eq_rows . x = eq_rhs,
///   x[first] <= x[second] for every pair in leq_pairs,
///   x[j] = 0 for j in fixed_zero,
///   x >= 0.
struct LpProblem {
    int num_vars = 0;
    std::vector<double> cost;
    std::vector<std::vector<double>> eq_rows;
    std::vector<double> eq_rhs;
    std::vector<std::pair<int, int>> leq_pairs;
    std::vector<int> fixed_zero;
};

struct LpSolution {
    std::vector<double> x;
    double objective = 0.0;
    int iterations = 0;
    double max_residual = 0.0;  // worst violation of any constraint at x
};

/// Two-phase primal simplex on a dense tableau. Dantzig pricing with a
/// permanent switch to Bland's rule after a degenerate stall, so the method
/// cannot cycle. The optimal basis is re-solved against the original data
/// with one step of iterative refinement before the solution is returned.
///
/// Throws SolverError on infeasibility, unboundedness, or iteration cap.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace aos
