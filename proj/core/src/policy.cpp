#include "aos/policy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aos/errors.hpp"

namespace aos {

namespace {
constexpr int kInitialBound = 32;
constexpr double kCapMassTol = 1e-8;
}  // namespace

LpProblem build_lp(const TruncatedMdp& mdp) {
    const int R = mdp.R;
    const int S_max = mdp.S_max;
    const int n_states = mdp.num_states();

    LpProblem lp;
    lp.num_vars = 2 * n_states;
    lp.cost.assign(lp.num_vars, 0.0);
    const auto mu_var = [&](int x) { return x; };
    const auto nu_var = [&](int x) { return n_states + x; };

    for (int s = 0; s <= S_max; ++s)
        for (int r = 0; r < R; ++r) {
            lp.cost[mu_var(mdp.idx(s, r))] = mdp.omega[r] * s;
            lp.cost[nu_var(mdp.idx(s, r))] = mdp.eta;
        }

    // normalization: total steady-state probability is 1
    {
        std::vector<double> row(lp.num_vars, 0.0);
        for (int x = 0; x < n_states; ++x) row[mu_var(x)] = 1.0;
        lp.eq_rows.push_back(std::move(row));
        lp.eq_rhs.push_back(1.0);
    }

    // one balance row per state: mu_x equals the inflow from every
    // (state, action) occupation, where idling occupies mu - nu and
    // transmitting occupies nu
    std::vector<std::vector<double>> balance(n_states,
                                             std::vector<double>(lp.num_vars, 0.0));
    for (int x = 0; x < n_states; ++x) balance[x][mu_var(x)] += 1.0;
    for (int s = 0; s <= S_max; ++s)
        for (int r = 0; r < R; ++r) {
            const int y = mdp.idx(s, r);
            if (mdp.action_allowed(s, 0))
                for (auto [x, p] : mdp.next(s, r, 0)) {
                    balance[x][mu_var(y)] -= p;
                    balance[x][nu_var(y)] += p;
                }
            for (auto [x, p] : mdp.next(s, r, 1)) balance[x][nu_var(y)] -= p;
        }
    for (auto& row : balance) {
        lp.eq_rows.push_back(std::move(row));
        lp.eq_rhs.push_back(0.0);
    }

    // forced transmission at the bound
    for (int r = 0; r < R; ++r) {
        std::vector<double> row(lp.num_vars, 0.0);
        row[mu_var(mdp.idx(S_max, r))] = 1.0;
        row[nu_var(mdp.idx(S_max, r))] = -1.0;
        lp.eq_rows.push_back(std::move(row));
        lp.eq_rhs.push_back(0.0);
    }

    for (int x = 0; x < n_states; ++x) lp.leq_pairs.emplace_back(nu_var(x), mu_var(x));
    for (int r = 0; r < R; ++r) lp.fixed_zero.push_back(nu_var(mdp.idx(0, r)));
    return lp;
}

OccupationSolution solve_node_fixed(const NodeConfig& node, double eta, int S_max) {
    const TruncatedMdp mdp = build_kernel(node, S_max, eta);
    const LpProblem lp = build_lp(mdp);
    LpSolution raw = solve_lp(lp);
    if (raw.max_residual > 1e-9)
        throw SolverError("node LP residual " + std::to_string(raw.max_residual) +
                          " above tolerance");

    const int n_states = mdp.num_states();
    OccupationSolution sol;
    sol.S_max = S_max;
    sol.R = mdp.R;
    sol.eta = eta;
    sol.omega = mdp.omega;
    sol.mu.assign(raw.x.begin(), raw.x.begin() + n_states);
    sol.nu.assign(raw.x.begin() + n_states, raw.x.end());
    std::tie(sol.J, sol.D) = node_J_D(sol);
    return sol;
}

OccupationSolution solve_node(const NodeConfig& node, double eta, int bound_ceiling) {
    double cap_mass = 0.0;
    for (int S_max = kInitialBound; S_max <= bound_ceiling; S_max *= 2) {
        OccupationSolution sol = solve_node_fixed(node, eta, S_max);
        cap_mass = 0.0;
        for (int r = 0; r < sol.R; ++r)
            cap_mass += sol.mu[static_cast<size_t>(S_max) * sol.R + r];
        if (cap_mass < kCapMassTol) return sol;
    }
    throw TruncationError("truncation ceiling " + std::to_string(bound_ceiling) +
                              " reached with cap mass " + std::to_string(cap_mass),
                          cap_mass);
}

TransmitPolicy extract_policy(int S_max, int R, const std::vector<double>& mu,
                              const std::vector<double>& nu, double tol) {
    TransmitPolicy pol;
    pol.S_max = S_max;
    pol.R = R;
    pol.xi.assign(static_cast<size_t>(S_max + 1) * R, 1.0);
    for (size_t i = 0; i < pol.xi.size(); ++i) {
        if (mu[i] <= tol) continue;  // unreachable: transmit with probability 1
        double xi = std::clamp(nu[i] / mu[i], 0.0, 1.0);
        // the ratio of two solver outputs carries noise near the integral
        // probabilities; snap it off
        if (xi < 1e-6) xi = 0.0;
        if (xi > 1.0 - 1e-6) xi = 1.0;
        pol.xi[i] = xi;
    }
    for (int r = 0; r < R; ++r) pol.xi[static_cast<size_t>(S_max) * R + r] = 1.0;
    return pol;
}

TransmitPolicy extract_policy(const OccupationSolution& sol, double tol) {
    return extract_policy(sol.S_max, sol.R, sol.mu, sol.nu, tol);
}

std::pair<double, double> node_J_D(const OccupationSolution& sol) {
    double J = 0.0;
    double D = 0.0;
    for (int s = 0; s <= sol.S_max; ++s)
        for (int r = 0; r < sol.R; ++r) {
            const size_t i = static_cast<size_t>(s) * sol.R + r;
            J += sol.omega[r] * s * sol.mu[i];
            D += sol.nu[i];
        }
    return {J, D};
}

std::vector<uint8_t> reachable_mask(const OccupationSolution& sol, double tol) {
    std::vector<uint8_t> mask(sol.mu.size());
    for (size_t i = 0; i < sol.mu.size(); ++i) mask[i] = sol.mu[i] > tol ? 1 : 0;
    return mask;
}

}  // namespace aos
