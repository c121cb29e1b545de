#pragma once

#include <span>
#include <vector>

#include "aos/model.hpp"
#include "aos/policy.hpp"

namespace aos {

/// Straddle of the multiplier value where the system transmission rate
/// crosses the budget: D(eta1) >= N >= D(eta2) with eta1 <= eta2. When the
/// budget is slack even at a near-zero multiplier the bracket is degenerate
/// (eta1 == eta2, constraint inactive).
struct MultiplierBracket {
    double eta1 = 0.0;
    double eta2 = 0.0;
    double D1 = 0.0;
    double D2 = 0.0;
    bool degenerate = false;
};

/// Per-node mixed occupation measure on the larger of the two truncation
/// bounds.
struct MixedMeasures {
    int S_max = 0;
    int R = 0;
    std::vector<double> omega;
    std::vector<double> mu;
    std::vector<double> nu;
};

/// Relaxed-optimal solution: the two-multiplier mixture, per-node policies
/// extracted from the mixed measures, and the analytic bound values.
struct RelaxedSolution {
    double eta1 = 0.0;
    double eta2 = 0.0;
    double alpha = 1.0;
    bool degenerate = false;
    double J_re = 0.0;  // analytic lower bound on the weighted AoS per slot
    double D_re = 0.0;  // analytic transmissions per slot (= N when mixing)
    std::vector<TransmitPolicy> policies;
    std::vector<MixedMeasures> mixed;
};

/// Total transmission rate over all nodes at a fixed multiplier.
double system_D(double eta, std::span<const NodeConfig> nodes);

/// Bisection straddle of the budget crossing. D is a non-increasing step
/// function of eta, so an exact root need not exist; the straddle realizes
/// the two policies on either side of the jump.
MultiplierBracket bracket_multiplier(std::span<const NodeConfig> nodes, double N,
                                     double eta_tol = 1e-6);

/// Mixing coefficient alpha = (N - D2) / (D1 - D2). Requires D1 >= N >= D2
/// and D1 > D2.
double compute_alpha(double D1, double D2, double N);

/// Convex combination of two solutions for the same node, zero-padded to the
/// larger truncation bound.
MixedMeasures mix_solutions(const OccupationSolution& sol1, const OccupationSolution& sol2,
                            double alpha);

/// Full relaxed-problem pipeline: bracket the multiplier, solve each node at
/// both endpoints, mix with the system-level alpha, extract policies.
RelaxedSolution relaxed_policy(std::span<const NodeConfig> nodes, double N);

}  // namespace aos
