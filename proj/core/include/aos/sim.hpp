#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "aos/model.hpp"
#include "aos/rng.hpp"
#include "aos/scheduler.hpp"

namespace aos {

/// Slot-level scheduling callback: current states plus the scheduler's own
/// random stream in, grant vector out.
using Scheduler = std::function<ScheduleDecision(std::span<const NodeState>, Rng&)>;

Scheduler make_near_stationary(std::vector<TransmitPolicy> policies, int N);
Scheduler make_greedy(std::vector<double> avg_weight, int N);

struct SimResult {
    double J_avg = 0.0;             // time-average weighted-sum AoS
    double D_avg = 0.0;             // time-average transmissions per slot
    std::vector<double> per_node_J;
    long long T = 0;
    uint64_t seed = 0;
};

/// Seeded slotted-time simulation. Node i draws arrivals and weight
/// transitions from substream i of the seed (in that order within a slot)
/// and the scheduler draws from substream M, so two schedulers replayed on
/// the same seed see identical arrival and weight sample paths. Initial
/// state: synchronized, weight states drawn from the chain's stationary
/// distribution. Bitwise deterministic for a given (config, seed).
SimResult run(const SystemConfig& config, const Scheduler& scheduler, uint64_t seed,
              long long burn_in = 0);

struct SweepRow {
    double x = 0.0;  // N or q
    double J_ours_mean = 0.0;
    double J_ours_se = 0.0;
    double J_greedy_mean = 0.0;
    double J_greedy_se = 0.0;
    double J_lower = 0.0;
};

/// One row per bandwidth cap on the reference configuration: simulated
/// near-stationary policy, simulated greedy baseline (common random numbers
/// across schedulers), and the analytic lower bound.
std::vector<SweepRow> sweep_N(double q, std::span<const int> N_list, long long T,
                              std::span<const uint64_t> seeds);

/// Same sweep over the weight-chain self-transition probability at fixed N.
std::vector<SweepRow> sweep_q(std::span<const double> q_list, int N, long long T,
                              std::span<const uint64_t> seeds);

/// Per-run master seeds derived from one user-facing seed.
std::vector<uint64_t> derive_seeds(uint64_t master, int count);

}  // namespace aos
