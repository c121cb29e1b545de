#include "aos/lagrange.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aos/errors.hpp"
#include "aos/parallel.hpp"

namespace aos {

namespace {

constexpr double kEtaProbeFloor = 1e-6;

std::vector<OccupationSolution> solve_all(double eta, std::span<const NodeConfig> nodes) {
    std::vector<OccupationSolution> sols(nodes.size());
    parallel_for(static_cast<int>(nodes.size()),
                 [&](int i) { sols[i] = solve_node(nodes[i], eta); });
    return sols;
}

double total_D(const std::vector<OccupationSolution>& sols) {
    double d = 0.0;
    for (const auto& s : sols) d += s.D;
    return d;
}

struct BracketSolutions {
    MultiplierBracket bracket;
    std::vector<OccupationSolution> at_eta1;
    std::vector<OccupationSolution> at_eta2;
};

BracketSolutions bracket_with_solutions(std::span<const NodeConfig> nodes, double N,
                                        double eta_tol) {
    if (N < 0.0) throw ConfigError("transmission budget must be non-negative");

    BracketSolutions out;
    auto lo_sols = solve_all(kEtaProbeFloor, nodes);
    double lo = kEtaProbeFloor;
    double D_lo = total_D(lo_sols);
    if (D_lo <= N) {
        // budget slack at a vanishing price: constraint inactive
        out.bracket = {lo, lo, D_lo, D_lo, true};
        out.at_eta1 = lo_sols;
        out.at_eta2 = std::move(lo_sols);
        return out;
    }

    double hi = 1.0;
    auto hi_sols = solve_all(hi, nodes);
    double D_hi = total_D(hi_sols);
    int doublings = 0;
    while (D_hi > N) {
        lo = hi;
        D_lo = D_hi;
        lo_sols = std::move(hi_sols);
        hi *= 2.0;
        hi_sols = solve_all(hi, nodes);
        D_hi = total_D(hi_sols);
        if (++doublings > 64)
            throw SolverError("multiplier search failed to push the rate below the budget");
    }

    while (hi - lo > eta_tol * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        auto mid_sols = solve_all(mid, nodes);
        const double D_mid = total_D(mid_sols);
        if (D_mid >= N) {
            lo = mid;
            D_lo = D_mid;
            lo_sols = std::move(mid_sols);
        } else {
            hi = mid;
            D_hi = D_mid;
            hi_sols = std::move(mid_sols);
        }
    }
    out.bracket = {lo, hi, D_lo, D_hi, false};
    out.at_eta1 = std::move(lo_sols);
    out.at_eta2 = std::move(hi_sols);
    return out;
}

}  // namespace

double system_D(double eta, std::span<const NodeConfig> nodes) {
    if (eta < 0.0) throw ConfigError("multiplier must be non-negative");
    return total_D(solve_all(eta, nodes));
}

MultiplierBracket bracket_multiplier(std::span<const NodeConfig> nodes, double N,
                                     double eta_tol) {
    return bracket_with_solutions(nodes, N, eta_tol).bracket;
}

double compute_alpha(double D1, double D2, double N) {
    if (!(D1 >= N - 1e-9 && N >= D2 - 1e-9))
        throw SolverError("mixing requires D1 >= N >= D2");
    if (!(D1 > D2))
        throw SolverError("degenerate bracket: D1 == D2 != N admits no mixing coefficient");
    return std::clamp((N - D2) / (D1 - D2), 0.0, 1.0);
}

MixedMeasures mix_solutions(const OccupationSolution& sol1, const OccupationSolution& sol2,
                            double alpha) {
    if (sol1.R != sol2.R) throw SolverError("mixing solutions of different nodes");
    if (alpha < 0.0 || alpha > 1.0) throw SolverError("mixing coefficient outside [0,1]");

    MixedMeasures mix;
    mix.S_max = std::max(sol1.S_max, sol2.S_max);
    mix.R = sol1.R;
    mix.omega = sol1.omega;
    const size_t size = static_cast<size_t>(mix.S_max + 1) * mix.R;
    mix.mu.assign(size, 0.0);
    mix.nu.assign(size, 0.0);
    const auto add = [&](const OccupationSolution& sol, double w) {
        if (w == 0.0) return;
        const size_t n = sol.mu.size();
        for (size_t i = 0; i < n; ++i) {
            mix.mu[i] += w * sol.mu[i];
            mix.nu[i] += w * sol.nu[i];
        }
    };
    add(sol1, alpha);
    add(sol2, 1.0 - alpha);
    return mix;
}

RelaxedSolution relaxed_policy(std::span<const NodeConfig> nodes, double N) {
    BracketSolutions bs = bracket_with_solutions(nodes, N, 1e-6);
    const MultiplierBracket& br = bs.bracket;

    RelaxedSolution rel;
    rel.eta1 = br.eta1;
    rel.eta2 = br.eta2;
    rel.degenerate = br.degenerate;
    if (br.degenerate || !(br.D1 > br.D2)) {
        rel.alpha = 1.0;
    } else {
        rel.alpha = compute_alpha(br.D1, br.D2, N);
    }

    rel.policies.reserve(nodes.size());
    rel.mixed.reserve(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
        MixedMeasures mix = mix_solutions(bs.at_eta1[i], bs.at_eta2[i], rel.alpha);
        rel.policies.push_back(extract_policy(mix.S_max, mix.R, mix.mu, mix.nu));
        for (int s = 0; s <= mix.S_max; ++s)
            for (int r = 0; r < mix.R; ++r) {
                const size_t k = static_cast<size_t>(s) * mix.R + r;
                rel.J_re += mix.omega[r] * s * mix.mu[k];
                rel.D_re += mix.nu[k];
            }
        rel.mixed.push_back(std::move(mix));
    }
    return rel;
}

}  // namespace aos
