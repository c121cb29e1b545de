#include "aos/scheduler.hpp"

#include <algorithm>

#include "aos/errors.hpp"

namespace aos {

ScheduleDecision near_stationary_schedule(std::span<const NodeState> states,
                                          std::span<const TransmitPolicy> policies, int N,
                                          Rng& rng) {
    if (states.size() != policies.size())
        throw ConfigError("state and policy lists differ in length");
    const int M = static_cast<int>(states.size());

    ScheduleDecision d;
    d.u.assign(M, 0);

    std::vector<int> requests;
    requests.reserve(M);
    for (int i = 0; i < M; ++i) {
        const double xi = policies[i].at(states[i].s, states[i].r);
        if (rng.bernoulli(xi)) requests.push_back(i);
    }

    if (static_cast<int>(requests.size()) <= N) {
        for (int i : requests) d.u[i] = 1;
        d.granted = static_cast<int>(requests.size());
        return d;
    }

    // partial Fisher-Yates: the first N entries become a uniform N-subset
    for (int k = 0; k < N; ++k) {
        const size_t j = k + rng.uniform_below(requests.size() - k);
        std::swap(requests[k], requests[j]);
        d.u[requests[k]] = 1;
    }
    d.granted = N;
    return d;
}

ScheduleDecision greedy_schedule(std::span<const NodeState> states,
                                 std::span<const double> avg_weight, int N) {
    if (states.size() != avg_weight.size())
        throw ConfigError("state and weight lists differ in length");
    const int M = static_cast<int>(states.size());

    ScheduleDecision d;
    d.u.assign(M, 0);

    std::vector<std::pair<double, int>> ranked;  // (product, node)
    ranked.reserve(M);
    for (int i = 0; i < M; ++i) {
        if (states[i].s == 0) continue;  // transmitting a synchronized node is a no-op
        ranked.emplace_back(states[i].s * avg_weight[i], i);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });

    const int grants = std::min<int>(N, static_cast<int>(ranked.size()));
    for (int k = 0; k < grants; ++k) d.u[ranked[k].second] = 1;
    d.granted = grants;
    return d;
}

std::vector<double> average_weights(std::span<const NodeConfig> nodes) {
    std::vector<double> w;
    w.reserve(nodes.size());
    for (const auto& node : nodes) {
        const std::vector<double> pi = stationary_weights(node.chain);
        double mean = 0.0;
        for (int r = 0; r < node.chain.R; ++r) mean += pi[r] * node.chain.omega[r];
        w.push_back(mean);
    }
    return w;
}

}  // namespace aos
