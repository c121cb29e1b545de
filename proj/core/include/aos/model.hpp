#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aos/rng.hpp"

namespace aos {

/// Markov chain over a node's weight states together with the weight value
/// attached to each state.
struct WeightChain {
    int R = 0;                  // number of weight states
    std::vector<double> P;      // R x R row-stochastic transition matrix, row-major
    std::vector<double> omega;  // weight value per state, all > 0

    double p(int r, int r_next) const { return P[static_cast<size_t>(r) * R + r_next]; }

    /// Throws ConfigError unless every row of P sums to 1 within 1e-12,
    /// all entries lie in [0,1], R >= 1 and all weights are positive.
    void validate() const;
};

struct NodeConfig {
    double lambda = 0.0;  // per-slot update arrival probability
    WeightChain chain;

    void validate() const;
};

struct SystemConfig {
    int M = 0;                      // node count
    int N = 0;                      // per-slot bandwidth cap, 1 <= N <= M
    std::vector<NodeConfig> nodes;  // size M
    long long T = 0;                // simulation horizon in slots
    uint64_t seed = 0;

    void validate() const;
};

/// A node's instantaneous state: AoS in slots and weight state index.
/// Weight states are 0-based internally.
struct NodeState {
    int s = 0;
    int r = 0;
};

/// Advance one node by one slot. `transmit` is the scheduling action for the
/// current slot, `arrival` the Bernoulli(lambda) draw for this slot (drawn by
/// the caller so that stream order stays explicit). The weight transition is
/// drawn from `rng`.
///
/// An arrival during the slot of a transmission lands as AoS 1 in the next
/// slot; while synchronized (s=0) only the arrival matters and the action is
/// irrelevant. This transition kernel is the single source of truth for both
/// the simulator and the per-node MDP.
NodeState step_node(NodeState state, bool transmit, bool arrival, const WeightChain& chain,
                    Rng& rng);

/// Weighted sum of the current AoS over all nodes.
double weighted_aos(std::span<const NodeState> states, std::span<const NodeConfig> nodes);

/// Unique stationary distribution of the weight chain. Throws ConfigError if
/// the chain has no unique stationary distribution.
std::vector<double> stationary_weights(const WeightChain& chain);

/// Reference 40-node configuration: arrival probabilities linearly spaced
/// from 0.9 down to 0.1, two weight states with values {1,10} scaled per node
/// by a Zipf coefficient 1/i^1.1, and a symmetric two-state weight chain with
/// self-transition probability q.
SystemConfig make_paper_config(double q, int N, long long T, uint64_t seed);

}  // namespace aos
