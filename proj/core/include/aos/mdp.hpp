#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aos/model.hpp"

namespace aos {

struct TransmitPolicy;  // defined in aos/policy.hpp

/// Finite per-node average-cost MDP over {0..S_max} x {0..R-1} with a
/// transmission price eta folded into the per-slot cost. At s = S_max the
/// only admissible action is transmit, which keeps the truncated chain
/// closed. The same kernel backs the LP and the test oracles.
struct TruncatedMdp {
    int S_max = 0;
    int R = 0;
    double lambda = 0.0;
    std::vector<double> P;      // weight chain, R x R row-major
    std::vector<double> omega;  // weight values
    double eta = 0.0;

    // kernel[u][state] is the list of (next_state, probability)
    std::vector<std::vector<std::pair<int, double>>> kernel[2];

    int num_states() const { return (S_max + 1) * R; }
    int idx(int s, int r) const { return s * R + r; }
    bool action_allowed(int s, int u) const { return u == 1 || s < S_max; }
    double cost(int s, int r, int u) const { return omega[r] * s + eta * u; }
    const std::vector<std::pair<int, double>>& next(int s, int r, int u) const {
        return kernel[u][idx(s, r)];
    }
};

/// Build the truncated kernel for one node at a given multiplier.
/// Transitions: while desynchronized, idling grows the AoS by one and
/// transmitting resets it to the arrival indicator; while synchronized only
/// the arrival matters. Weight states evolve independently by the chain.
TruncatedMdp build_kernel(const NodeConfig& node, int S_max, double eta);

/// Per-weight-state transmit thresholds, with an optional single state where
/// the policy randomizes strictly between idle and transmit.
struct ThresholdProfile {
    std::vector<int> tau;                            // first state with xi == 1, per r
    std::vector<std::optional<int>> fractional_state;  // boundary randomization, per r
};

struct ThresholdCheck {
    bool ok = false;
    ThresholdProfile profile;  // meaningful when ok
    int violation_s = -1;      // meaningful when !ok
    int violation_r = -1;
    std::string message;
};

/// Verify that a policy is threshold-structured on the reachable states:
/// per weight state, idle states first, at most one randomized state, then
/// transmit states. `reachable` has one flag per (s,r), indexed s*R + r.
ThresholdCheck check_threshold(const TransmitPolicy& policy,
                               const std::vector<uint8_t>& reachable);

}  // namespace aos
