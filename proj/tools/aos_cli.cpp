// aos: solve relaxed scheduling policies, simulate them under the hard
// per-slot bandwidth cap, and sweep the reference configuration.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aos/config_io.hpp"
#include "aos/errors.hpp"
#include "aos/lagrange.hpp"
#include "aos/sim.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw aos::ConfigError("cannot write " + path);
    out << text;
}

struct SolveArgs {
    std::string config_path;
    std::string out_path = "policy.json";
    int N_override = -1;
    double eta = -1.0;
};

int cmd_solve(const SolveArgs& args) {
    aos::SystemConfig cfg = aos::load_system_config(args.config_path);
    if (args.N_override > 0) cfg.N = args.N_override;
    cfg.validate();

    aos::RelaxedSolution rel;
    if (args.eta >= 0.0) {
        // fixed-multiplier mode: per-node solutions at one eta, no mixing
        rel.eta1 = rel.eta2 = args.eta;
        rel.alpha = 1.0;
        rel.degenerate = true;
        for (const auto& node : cfg.nodes) {
            aos::OccupationSolution sol = aos::solve_node(node, args.eta);
            rel.J_re += sol.J;
            rel.D_re += sol.D;
            rel.policies.push_back(aos::extract_policy(sol));
            rel.mixed.push_back(aos::mix_solutions(sol, sol, 1.0));
        }
    } else {
        rel = aos::relaxed_policy(cfg.nodes, cfg.N);
    }

    aos::save_artifact(aos::make_artifact(rel, cfg.M, cfg.N), args.out_path);
    std::cout << "eta1=" << fmt9(rel.eta1) << " eta2=" << fmt9(rel.eta2)
              << " alpha=" << fmt9(rel.alpha) << " J_re=" << fmt9(rel.J_re)
              << " D_re=" << fmt9(rel.D_re) << '\n';
    return 0;
}

struct SimulateArgs {
    std::string config_path;
    std::string policy_path;
    bool greedy = false;
    std::string out_path = "simulate.csv";
    std::vector<uint64_t> seeds;
    long long T_override = -1;
};

int cmd_simulate(const SimulateArgs& args) {
    aos::SystemConfig cfg = aos::load_system_config(args.config_path);
    if (args.T_override > 0) cfg.T = args.T_override;
    cfg.validate();

    std::string name;
    aos::Scheduler scheduler;
    if (args.greedy) {
        name = "greedy";
        scheduler = aos::make_greedy(aos::average_weights(cfg.nodes), cfg.N);
    } else {
        if (args.policy_path.empty())
            throw aos::ConfigError("simulate needs --policy or --greedy");
        const aos::PolicyArtifact artifact = aos::load_artifact(args.policy_path);
        if (artifact.M != cfg.M)
            throw aos::ConfigError("policy artifact was solved for a different node count");
        name = "pi_s";
        scheduler = aos::make_near_stationary(artifact.policies, cfg.N);
    }

    std::vector<uint64_t> seeds = args.seeds;
    if (seeds.empty()) seeds.push_back(cfg.seed);

    std::string csv = "scheduler,seed,T,J_avg,D_avg\n";
    for (uint64_t seed : seeds) {
        const aos::SimResult res = aos::run(cfg, scheduler, seed);
        char line[160];
        std::snprintf(line, sizeof(line), "%s,%" PRIu64 ",%lld,%s,%s\n", name.c_str(), seed,
                      res.T, fmt9(res.J_avg).c_str(), fmt9(res.D_avg).c_str());
        csv += line;
    }
    write_text(args.out_path, csv);
    return 0;
}

struct SweepArgs {
    std::string mode;
    double q = 0.1;
    int N = 6;
    std::vector<int> N_list = {2, 4, 6, 8, 12, 20};
    std::vector<double> q_list = {0.1, 0.3, 0.5, 0.7, 0.9};
    long long T = 100000;
    uint64_t seed = 1;
    int num_seeds = 5;
    std::string out_path = "sweep.csv";
};

int cmd_sweep(const SweepArgs& args) {
    const std::vector<uint64_t> seeds = aos::derive_seeds(args.seed, args.num_seeds);
    std::vector<aos::SweepRow> rows;
    if (args.mode == "n") {
        rows = aos::sweep_N(args.q, args.N_list, args.T, seeds);
    } else if (args.mode == "q") {
        rows = aos::sweep_q(args.q_list, args.N, args.T, seeds);
    } else {
        throw aos::ConfigError("sweep mode must be 'n' or 'q'");
    }

    std::string csv = "x,J_ours_mean,J_ours_se,J_greedy_mean,J_greedy_se,J_lower\n";
    for (const auto& r : rows) {
        csv += fmt9(r.x) + "," + fmt9(r.J_ours_mean) + "," + fmt9(r.J_ours_se) + "," +
               fmt9(r.J_greedy_mean) + "," + fmt9(r.J_greedy_se) + "," + fmt9(r.J_lower) +
               "\n";
    }
    write_text(args.out_path, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted-AoS policy synthesis and slotted-time simulation"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand(
        "solve", "Solve the relaxed policy (or fixed-eta policies) and write an artifact");
    solve->add_option("--config", solve_args.config_path, "system config JSON")->required();
    solve->add_option("--out", solve_args.out_path, "artifact output path");
    solve->add_option("--N", solve_args.N_override, "override the bandwidth budget");
    solve->add_option("--eta", solve_args.eta, "solve each node at this fixed multiplier");

    SimulateArgs sim_args;
    CLI::App* simulate =
        app.add_subcommand("simulate", "Run the slotted simulator and write a CSV");
    simulate->add_option("--config", sim_args.config_path, "system config JSON")->required();
    simulate->add_option("--policy", sim_args.policy_path, "policy artifact from solve");
    simulate->add_flag("--greedy", sim_args.greedy, "use the greedy baseline scheduler");
    simulate->add_option("--seed", sim_args.seeds, "master seed(s), one row per seed");
    simulate->add_option("--T", sim_args.T_override, "override the horizon");
    simulate->add_option("--out", sim_args.out_path, "CSV output path");

    SweepArgs sweep_args;
    CLI::App* sweep =
        app.add_subcommand("sweep", "Reproduce the bandwidth / self-transition sweeps");
    sweep->add_option("--mode", sweep_args.mode, "n (bandwidth) or q (self-transition)")
        ->required();
    sweep->add_option("--q", sweep_args.q, "self-transition probability for mode n");
    sweep->add_option("--N", sweep_args.N, "bandwidth budget for mode q");
    sweep->add_option("--N-list", sweep_args.N_list, "bandwidth values for mode n");
    sweep->add_option("--q-list", sweep_args.q_list, "self-transition values for mode q");
    sweep->add_option("--T", sweep_args.T, "slots per simulation");
    sweep->add_option("--seed", sweep_args.seed, "master seed");
    sweep->add_option("--seeds", sweep_args.num_seeds, "number of derived seeds");
    sweep->add_option("--out", sweep_args.out_path, "CSV output path");

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return cmd_solve(solve_args);
        if (simulate->parsed()) return cmd_simulate(sim_args);
        return cmd_sweep(sweep_args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    } catch (const aos::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const aos::SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolver;
    }
}
