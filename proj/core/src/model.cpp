#include "aos/model.hpp"

#include <cmath>
#include <string>

#include "aos/errors.hpp"
#include "aos/linalg.hpp"

namespace aos {

void WeightChain::validate() const {
    if (R < 1) throw ConfigError("weight chain needs at least one state");
    if (P.size() != static_cast<size_t>(R) * R)
        throw ConfigError("weight transition matrix has wrong size");
    if (omega.size() != static_cast<size_t>(R))
        throw ConfigError("weight value vector has wrong size");
    for (int r = 0; r < R; ++r) {
        double row = 0.0;
        for (int c = 0; c < R; ++c) {
            const double v = p(r, c);
            if (v < 0.0 || v > 1.0)
                throw ConfigError("weight transition probability outside [0,1]");
            row += v;
        }
        if (std::abs(row - 1.0) > 1e-12)
            throw ConfigError("weight transition row " + std::to_string(r) +
                              " does not sum to 1");
    }
    for (double w : omega)
        if (!(w > 0.0)) throw ConfigError("weight values must be positive");
}

void NodeConfig::validate() const {
    if (lambda < 0.0 || lambda > 1.0) throw ConfigError("arrival probability outside [0,1]");
    chain.validate();
}

void SystemConfig::validate() const {
    if (M < 1) throw ConfigError("node count must be positive");
    if (nodes.size() != static_cast<size_t>(M))
        throw ConfigError("node list does not match node count");
    if (N < 1 || N > M) throw ConfigError("bandwidth cap must satisfy 1 <= N <= M");
    if (T < 1) throw ConfigError("horizon must be at least one slot");
    for (const auto& n : nodes) n.validate();
}

NodeState step_node(NodeState state, bool transmit, bool arrival, const WeightChain& chain,
                    Rng& rng) {
    NodeState next;
    if (state.s == 0 || transmit) {
        next.s = arrival ? 1 : 0;
    } else {
        next.s = state.s + 1;
    }
    next.r = rng.sample_categorical(
        std::span<const double>(chain.P.data() + static_cast<size_t>(state.r) * chain.R,
                                static_cast<size_t>(chain.R)));
    return next;
}

double weighted_aos(std::span<const NodeState> states, std::span<const NodeConfig> nodes) {
    if (states.size() != nodes.size())
        throw ConfigError("state and node lists differ in length");
    double total = 0.0;
    for (size_t i = 0; i < states.size(); ++i)
        total += nodes[i].chain.omega[states[i].r] * states[i].s;
    return total;
}

std::vector<double> stationary_weights(const WeightChain& chain) {
    chain.validate();
    std::vector<double> pi = linalg::stationary_distribution(chain.P, chain.R);
    if (pi.empty())
        throw ConfigError("weight chain has no unique stationary distribution");
    return pi;
}

SystemConfig make_paper_config(double q, int N, long long T, uint64_t seed) {
    if (!(q > 0.0 && q < 1.0)) throw ConfigError("self-transition probability must lie in (0,1)");
    constexpr int M = 40;
    constexpr double zipf_delta = 1.1;

    SystemConfig cfg;
    cfg.M = M;
    cfg.N = N;
    cfg.T = T;
    cfg.seed = seed;
    cfg.nodes.reserve(M);
    for (int i = 1; i <= M; ++i) {
        NodeConfig node;
        node.lambda = 0.9 - 0.8 * (i - 1) / static_cast<double>(M - 1);
        const double c = std::pow(static_cast<double>(i), -zipf_delta);
        node.chain.R = 2;
        node.chain.P = {q, 1.0 - q, 1.0 - q, q};
        node.chain.omega = {c * 1.0, c * 10.0};
        cfg.nodes.push_back(std::move(node));
    }
    cfg.validate();
    return cfg;
}

}  // namespace aos
