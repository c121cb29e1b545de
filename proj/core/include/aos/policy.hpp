#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "aos/lp.hpp"
#include "aos/mdp.hpp"
#include "aos/model.hpp"

namespace aos {

/// Stationary per-node transmit policy: probability of requesting a
/// transmission in each (AoS, weight-state) pair. xi is forced to 1 at the
/// truncation bound; lookups clamp s to S_max.
struct TransmitPolicy {
    int S_max = 0;
    int R = 0;
    std::vector<double> xi;  // (S_max+1) x R row-major

    double at(int s, int r) const {
        const int sc = s > S_max ? S_max : s;
        return xi[static_cast<size_t>(sc) * R + r];
    }
};

/// Solution of the per-node occupation-measure LP at one multiplier:
/// steady-state probabilities mu, transmit occupation nu, and the induced
/// time-average weighted AoS J and transmission rate D.
struct OccupationSolution {
    int S_max = 0;
    int R = 0;
    double eta = 0.0;
    std::vector<double> omega;  // weight values, kept for J recomputation
    std::vector<double> mu;     // (S_max+1) x R row-major
    std::vector<double> nu;
    double J = 0.0;
    double D = 0.0;

    double objective() const { return J + eta * D; }
};

/// Occupation-measure LP for a truncated node MDP. Variables are all mu
/// entries followed by all nu entries; rows are the normalization, one
/// balance equation per state (derived from the kernel, so the LP and the
/// oracles share a single model), and the forced-transmit rows at the bound.
/// nu at s=0 is pinned to zero: transmitting while synchronized only adds
/// cost and the pin removes the degenerate direction.
LpProblem build_lp(const TruncatedMdp& mdp);

/// Solve the node LP at a fixed truncation bound.
OccupationSolution solve_node_fixed(const NodeConfig& node, double eta, int S_max);

/// Solve with the adaptive bound: start at S_max=32 and double until the
/// probability mass at the bound drops below 1e-8, ceiling 4096 by default.
/// Throws TruncationError if the ceiling is hit with non-negligible mass.
OccupationSolution solve_node(const NodeConfig& node, double eta, int bound_ceiling = 4096);

/// xi = nu/mu on reachable states; unreachable states (mu below tolerance)
/// transmit with probability 1.
TransmitPolicy extract_policy(int S_max, int R, const std::vector<double>& mu,
                              const std::vector<double>& nu, double tol = 1e-9);
TransmitPolicy extract_policy(const OccupationSolution& sol, double tol = 1e-9);

/// Time-average weighted AoS and transmission rate of an occupation measure.
std::pair<double, double> node_J_D(const OccupationSolution& sol);

/// Reachability flags (mu above tolerance), indexed s*R + r.
std::vector<uint8_t> reachable_mask(const OccupationSolution& sol, double tol = 1e-9);

}  // namespace aos
