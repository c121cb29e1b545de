#include "aos/sim.hpp"

#include <cmath>
#include <utility>

#include "aos/errors.hpp"
#include "aos/lagrange.hpp"
#include "aos/parallel.hpp"

namespace aos {

Scheduler make_near_stationary(std::vector<TransmitPolicy> policies, int N) {
    return [policies = std::move(policies), N](std::span<const NodeState> states, Rng& rng) {
        return near_stationary_schedule(states, policies, N, rng);
    };
}

Scheduler make_greedy(std::vector<double> avg_weight, int N) {
    return [avg_weight = std::move(avg_weight), N](std::span<const NodeState> states, Rng&) {
        return greedy_schedule(states, avg_weight, N);
    };
}

SimResult run(const SystemConfig& config, const Scheduler& scheduler, uint64_t seed,
              long long burn_in) {
    config.validate();
    if (burn_in < 0 || burn_in >= config.T)
        throw ConfigError("burn-in must lie in [0, T)");
    const int M = config.M;

    std::vector<Rng> node_rng;
    node_rng.reserve(M);
    for (int i = 0; i < M; ++i) node_rng.push_back(Rng::stream(seed, i));
    Rng sched_rng = Rng::stream(seed, M);

    std::vector<NodeState> states(M);
    for (int i = 0; i < M; ++i) {
        const std::vector<double> pi = stationary_weights(config.nodes[i].chain);
        states[i].s = 0;
        states[i].r = node_rng[i].sample_categorical(pi);
    }

    SimResult res;
    res.T = config.T - burn_in;
    res.seed = seed;
    res.per_node_J.assign(M, 0.0);
    double D_sum = 0.0;

    for (long long t = 0; t < config.T; ++t) {
        const bool measured = t >= burn_in;
        if (measured)
            for (int i = 0; i < M; ++i)
                res.per_node_J[i] += config.nodes[i].chain.omega[states[i].r] * states[i].s;

        const ScheduleDecision d = scheduler(states, sched_rng);
        if (d.granted > config.N || static_cast<int>(d.u.size()) != M)
            throw SolverError("scheduler violated the per-slot bandwidth cap");
        if (measured) D_sum += d.granted;

        for (int i = 0; i < M; ++i) {
            const bool arrival = node_rng[i].bernoulli(config.nodes[i].lambda);
            states[i] = step_node(states[i], d.u[i] != 0, arrival, config.nodes[i].chain,
                                  node_rng[i]);
        }
    }

    for (int i = 0; i < M; ++i) {
        res.per_node_J[i] /= static_cast<double>(res.T);
        res.J_avg += res.per_node_J[i];
    }
    res.D_avg = D_sum / static_cast<double>(res.T);
    return res;
}

namespace {

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& xs) {
    MeanSe out;
    const size_t n = xs.size();
    for (double x : xs) out.mean += x;
    out.mean /= static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.se = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
    }
    return out;
}

SweepRow sweep_point(double x, const SystemConfig& cfg, std::span<const uint64_t> seeds) {
    const RelaxedSolution rel = relaxed_policy(cfg.nodes, cfg.N);
    const Scheduler ours = make_near_stationary(rel.policies, cfg.N);
    const Scheduler greedy = make_greedy(average_weights(cfg.nodes), cfg.N);

    const int n_seeds = static_cast<int>(seeds.size());
    std::vector<double> J_ours(n_seeds);
    std::vector<double> J_greedy(n_seeds);
    parallel_for(2 * n_seeds, [&](int k) {
        const int s = k / 2;
        if (k % 2 == 0)
            J_ours[s] = run(cfg, ours, seeds[s]).J_avg;
        else
            J_greedy[s] = run(cfg, greedy, seeds[s]).J_avg;
    });

    SweepRow row;
    row.x = x;
    const MeanSe mo = mean_se(J_ours);
    const MeanSe mg = mean_se(J_greedy);
    row.J_ours_mean = mo.mean;
    row.J_ours_se = mo.se;
    row.J_greedy_mean = mg.mean;
    row.J_greedy_se = mg.se;
    row.J_lower = rel.J_re;
    return row;
}

}  // namespace

std::vector<SweepRow> sweep_N(double q, std::span<const int> N_list, long long T,
                              std::span<const uint64_t> seeds) {
    if (N_list.empty()) throw ConfigError("empty bandwidth sweep range");
    if (seeds.empty()) throw ConfigError("at least one seed required");
    std::vector<SweepRow> rows;
    rows.reserve(N_list.size());
    for (int N : N_list)
        rows.push_back(sweep_point(N, make_paper_config(q, N, T, seeds[0]), seeds));
    return rows;
}

std::vector<SweepRow> sweep_q(std::span<const double> q_list, int N, long long T,
                              std::span<const uint64_t> seeds) {
    if (q_list.empty()) throw ConfigError("empty self-transition sweep range");
    if (seeds.empty()) throw ConfigError("at least one seed required");
    std::vector<SweepRow> rows;
    rows.reserve(q_list.size());
    for (double q : q_list)
        rows.push_back(sweep_point(q, make_paper_config(q, N, T, seeds[0]), seeds));
    return rows;
}

std::vector<uint64_t> derive_seeds(uint64_t master, int count) {
    std::vector<uint64_t> seeds;
    seeds.reserve(count);
    Rng seq = Rng::stream(master, 0xA05DECADEull);
    for (int i = 0; i < count; ++i) seeds.push_back(seq.next_u64());
    return seeds;
}

}  // namespace aos
