#pragma once

// Ground-truth solvers used only by the test suites. Deliberately simple and
// independent of the LP path they validate: the only shared component is the
// transition kernel itself. Linear systems are solved by a local Gaussian
// elimination, not the library's.

#include <vector>

#include "aos/mdp.hpp"

namespace aos::oracle {

struct RviResult {
    double gain = 0.0;
    std::vector<int> policy;  // optimal action per state index
    int iterations = 0;
};

/// Relative value iteration for the average-cost problem on the truncated
/// kernel, with a self-loop damping transform so periodic chains converge.
/// Reference state (s=0, r=0). Stops when the span of the value update drops
/// below tol; throws after iter_cap sweeps.
RviResult rvi_average_cost(const TruncatedMdp& mdp, double tol = 1e-10,
                           long long iter_cap = 1000000);

struct ThresholdEnumeration {
    std::vector<int> best_tau;  // per weight state
    double best_gain = 0.0;
};

/// Exhaustive scan over all threshold vectors in {1..S_max}^R: build the
/// induced chain, solve its stationary distribution, average the cost.
/// Ties keep the lexicographically first threshold vector.
ThresholdEnumeration enumerate_threshold_policies(const TruncatedMdp& mdp);

/// Stationary distribution of an n-state chain given as a dense row-major
/// transition matrix. Throws when no unique stationary distribution exists
/// (for example two recurrent classes) or the residual exceeds 1e-10.
std::vector<double> chain_stationary(const std::vector<double>& transition, int n);

/// Dense transition matrix of the chain the policy induces on the kernel
/// (xi is the per-state transmit probability, indexed like the kernel).
std::vector<double> induced_chain(const TruncatedMdp& mdp, const std::vector<double>& xi);

/// Average cost of a fixed randomized policy on the kernel, via the
/// stationary distribution of its induced chain.
double policy_average_cost(const TruncatedMdp& mdp, const std::vector<double>& xi);

}  // namespace aos::oracle
