#include <benchmark/benchmark.h>

#include "aos/lagrange.hpp"
#include "aos/model.hpp"
#include "aos/policy.hpp"
#include "aos/sim.hpp"

namespace {

aos::NodeConfig paper_node(int i, double q = 0.1) {
    const aos::SystemConfig cfg = aos::make_paper_config(q, 6, 1000, 1);
    return cfg.nodes[i];
}

void BM_NodeSolve(benchmark::State& state) {
    const aos::NodeConfig node = paper_node(static_cast<int>(state.range(0)));
    const double eta = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(aos::solve_node(node, eta));
    }
}
BENCHMARK(BM_NodeSolve)->Arg(0)->Arg(20)->Arg(39)->Unit(benchmark::kMillisecond);

void BM_NodeSolveFixedBound(benchmark::State& state) {
    const aos::NodeConfig node = paper_node(39);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            aos::solve_node_fixed(node, 4.0, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_NodeSolveFixedBound)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_RelaxedPolicySmall(benchmark::State& state) {
    std::vector<aos::NodeConfig> nodes;
    for (int i = 0; i < 4; ++i) nodes.push_back(paper_node(i * 10));
    for (auto _ : state) {
        benchmark::DoNotOptimize(aos::relaxed_policy(nodes, 1.0));
    }
}
BENCHMARK(BM_RelaxedPolicySmall)->Unit(benchmark::kMillisecond);

void BM_SimulateSlots(benchmark::State& state) {
    aos::SystemConfig cfg = aos::make_paper_config(0.1, 6, state.range(0), 1);
    const aos::Scheduler greedy =
        aos::make_greedy(aos::average_weights(cfg.nodes), cfg.N);
    for (auto _ : state) {
        benchmark::DoNotOptimize(aos::run(cfg, greedy, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateSlots)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
