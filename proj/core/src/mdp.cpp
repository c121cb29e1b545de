#include "aos/mdp.hpp"

#include <cmath>

#include "aos/errors.hpp"
#include "aos/policy.hpp"

namespace aos {

TruncatedMdp build_kernel(const NodeConfig& node, int S_max, double eta) {
    node.validate();
    if (S_max < 1) throw ConfigError("truncation bound must be at least 1");
    if (eta < 0.0) throw ConfigError("multiplier must be non-negative");

    TruncatedMdp mdp;
    mdp.S_max = S_max;
    mdp.R = node.chain.R;
    mdp.lambda = node.lambda;
    mdp.P = node.chain.P;
    mdp.omega = node.chain.omega;
    mdp.eta = eta;

    const int R = mdp.R;
    const double lambda = mdp.lambda;
    mdp.kernel[0].resize(mdp.num_states());
    mdp.kernel[1].resize(mdp.num_states());

    for (int s = 0; s <= S_max; ++s) {
        for (int r = 0; r < R; ++r) {
            const int x = mdp.idx(s, r);
            for (int u = 0; u < 2; ++u) {
                if (!mdp.action_allowed(s, u)) continue;
                auto& out = mdp.kernel[u][x];
                for (int r2 = 0; r2 < R; ++r2) {
                    const double pw = node.chain.p(r, r2);
                    if (pw == 0.0) continue;
                    if (s == 0 || u == 1) {
                        // resynchronized (or already synchronized): next AoS is
                        // the arrival indicator
                        if (lambda < 1.0) out.emplace_back(mdp.idx(0, r2), pw * (1.0 - lambda));
                        if (lambda > 0.0) out.emplace_back(mdp.idx(1, r2), pw * lambda);
                    } else {
                        out.emplace_back(mdp.idx(s + 1, r2), pw);
                    }
                }
            }
        }
    }
    return mdp;
}

ThresholdCheck check_threshold(const TransmitPolicy& policy,
                               const std::vector<uint8_t>& reachable) {
    constexpr double tol = 1e-7;
    const int R = policy.R;
    const int S_max = policy.S_max;

    ThresholdCheck result;
    result.profile.tau.assign(R, S_max + 1);
    result.profile.fractional_state.assign(R, std::nullopt);

    for (int r = 0; r < R; ++r) {
        // expected shape along s (reachable states only): 0...0 [frac] 1...1
        int phase = 0;  // 0 = idle run, 1 = fractional seen, 2 = transmit run
        for (int s = 0; s <= S_max; ++s) {
            if (!reachable[static_cast<size_t>(s) * R + r]) continue;
            const double xi = policy.xi[static_cast<size_t>(s) * R + r];
            const bool is_zero = xi <= tol;
            const bool is_one = xi >= 1.0 - tol;
            if (is_one) {
                if (phase < 2) {
                    phase = 2;
                    result.profile.tau[r] = s;
                }
            } else if (is_zero) {
                if (phase != 0) {
                    result.ok = false;
                    result.violation_s = s;
                    result.violation_r = r;
                    result.message = "idle state after a transmitting state (s=" +
                                     std::to_string(s) + ", r=" + std::to_string(r) + ")";
                    return result;
                }
            } else {
                if (phase != 0) {
                    result.ok = false;
                    result.violation_s = s;
                    result.violation_r = r;
                    result.message = "second randomized state (s=" + std::to_string(s) +
                                     ", r=" + std::to_string(r) + ")";
                    return result;
                }
                phase = 1;
                result.profile.fractional_state[r] = s;
            }
        }
    }
    result.ok = true;
    return result;
}

}  // namespace aos
