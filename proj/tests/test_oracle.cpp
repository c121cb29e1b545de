#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aos/mdp.hpp"
#include "aos/policy.hpp"
#include "aos/rng.hpp"
#include "oracle/oracle.hpp"

using namespace aos;

namespace {

NodeConfig node_single(double lambda, double omega = 1.0) {
    NodeConfig n;
    n.lambda = lambda;
    n.chain.R = 1;
    n.chain.P = {1.0};
    n.chain.omega = {omega};
    return n;
}

NodeConfig random_node(Rng& rng, int R) {
    NodeConfig n;
    n.lambda = 0.1 + 0.8 * rng.next_double();
    n.chain.R = R;
    n.chain.P.resize(static_cast<size_t>(R) * R);
    for (int r = 0; r < R; ++r) {
        double total = 0.0;
        for (int c = 0; c < R; ++c) {
            const double v = 0.05 + rng.next_double();
            n.chain.P[static_cast<size_t>(r) * R + c] = v;
            total += v;
        }
        for (int c = 0; c < R; ++c) n.chain.P[static_cast<size_t>(r) * R + c] /= total;
    }
    n.chain.omega.resize(R);
    for (int r = 0; r < R; ++r) n.chain.omega[r] = 0.1 + 5.0 * rng.next_double();
    return n;
}

}  // namespace

TEST_CASE("rvi on a node that never desynchronizes") {
    const TruncatedMdp mdp = build_kernel(node_single(0.0), 6, 1.0);
    const auto res = oracle::rvi_average_cost(mdp);
    CHECK(res.gain == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(res.policy[mdp.idx(0, 0)] == 0);  // idle while synchronized
}

TEST_CASE("rvi on deterministic arrivals") {
    SUBCASE("cheap transmissions: send every slot") {
        const TruncatedMdp mdp = build_kernel(node_single(1.0), 6, 0.5);
        CHECK(oracle::rvi_average_cost(mdp).gain == doctest::Approx(1.5).epsilon(1e-8));
    }
    SUBCASE("expensive transmissions: two-slot cycle") {
        const TruncatedMdp mdp = build_kernel(node_single(1.0), 6, 3.0);
        CHECK(oracle::rvi_average_cost(mdp).gain == doctest::Approx(3.0).epsilon(1e-8));
    }
}

TEST_CASE("threshold enumeration on deterministic arrivals") {
    const TruncatedMdp mdp = build_kernel(node_single(1.0), 6, 0.5);
    const auto res = oracle::enumerate_threshold_policies(mdp);
    CHECK(res.best_tau[0] == 1);
    CHECK(res.best_gain == doctest::Approx(1.5).epsilon(1e-12));

    const TruncatedMdp pricey = build_kernel(node_single(1.0), 6, 3.0);
    const auto res2 = oracle::enumerate_threshold_policies(pricey);
    CHECK(res2.best_tau[0] == 2);  // ties go to the first vector scanned
    CHECK(res2.best_gain == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("chain_stationary") {
    SUBCASE("two-cycle") {
        const std::vector<double> p{0.0, 1.0, 1.0, 0.0};
        const auto pi = oracle::chain_stationary(p, 2);
        CHECK(pi[0] == doctest::Approx(0.5));
        CHECK(pi[1] == doctest::Approx(0.5));
    }
    SUBCASE("absorbing synchronized state when nothing arrives") {
        const TruncatedMdp mdp = build_kernel(node_single(0.0), 3, 1.0);
        const std::vector<double> xi(mdp.num_states(), 0.0);
        const auto pi = oracle::chain_stationary(oracle::induced_chain(mdp, xi),
                                                 mdp.num_states());
        CHECK(pi[mdp.idx(0, 0)] == doctest::Approx(1.0));
    }
    SUBCASE("two closed classes throw") {
        const std::vector<double> p{1.0, 0.0, 0.0, 1.0};
        CHECK_THROWS(oracle::chain_stationary(p, 2));
    }
}

TEST_CASE("rvi agrees with enumeration on random instances") {
    Rng rng(7771);
    for (int k = 0; k < 12; ++k) {
        const int R = 1 + static_cast<int>(rng.uniform_below(3));
        const int S_max = 4 + static_cast<int>(rng.uniform_below(8));
        const NodeConfig node = random_node(rng, R);
        const double eta = 0.1 + 6.0 * rng.next_double();
        const TruncatedMdp mdp = build_kernel(node, S_max, eta);

        const double g_rvi = oracle::rvi_average_cost(mdp).gain;
        const double g_enum = oracle::enumerate_threshold_policies(mdp).best_gain;
        CHECK(std::abs(g_rvi - g_enum) < 1e-8 * std::max(1.0, std::abs(g_enum)));
    }
}

TEST_CASE("rvi optimal policy is threshold-structured") {
    Rng rng(4242);
    for (int k = 0; k < 8; ++k) {
        const int R = 1 + static_cast<int>(rng.uniform_below(3));
        const NodeConfig node = random_node(rng, R);
        const double eta = 0.2 + 4.0 * rng.next_double();
        const TruncatedMdp mdp = build_kernel(node, 10, eta);
        const auto res = oracle::rvi_average_cost(mdp);

        TransmitPolicy pol;
        pol.S_max = mdp.S_max;
        pol.R = mdp.R;
        pol.xi.resize(mdp.num_states());
        for (int x = 0; x < mdp.num_states(); ++x) pol.xi[x] = res.policy[x];
        const std::vector<uint8_t> reach(mdp.num_states(), 1);
        CHECK(check_threshold(pol, reach).ok);
    }
}
