#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aos/model.hpp"
#include "aos/policy.hpp"
#include "aos/rng.hpp"

namespace aos {

/// One slot's transmission grants. Never more than the cap.
struct ScheduleDecision {
    std::vector<uint8_t> u;  // one flag per node
    int granted = 0;
};

/// Each node requests with its stationary policy probability; requests are
/// all granted when they fit the cap, otherwise a uniformly random N-subset
/// of the requesters is granted (partial Fisher-Yates over the request list).
ScheduleDecision near_stationary_schedule(std::span<const NodeState> states,
                                          std::span<const TransmitPolicy> policies, int N,
                                          Rng& rng);

/// Baseline that ignores weight-state dynamics: grant the N largest products
/// of current AoS and long-run average weight. Synchronized nodes are never
/// granted; ties go to the lower node index.
ScheduleDecision greedy_schedule(std::span<const NodeState> states,
                                 std::span<const double> avg_weight, int N);

/// Long-run expected weight per node (stationary distribution of the weight
/// chain composed with the weight values); the greedy baseline's ranking key.
std::vector<double> average_weights(std::span<const NodeConfig> nodes);

}  // namespace aos
