#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "aos/rng.hpp"
#include "aos/scheduler.hpp"

using namespace aos;

namespace {

TransmitPolicy constant_policy(double xi, int S_max = 4) {
    TransmitPolicy p;
    p.S_max = S_max;
    p.R = 1;
    p.xi.assign(S_max + 1, xi);
    p.xi[S_max] = 1.0;
    return p;
}

}  // namespace

TEST_CASE("near-stationary scheduling under the cap") {
    Rng rng(100);
    // nodes 1, 3, 5 request deterministically, the others never do
    std::vector<TransmitPolicy> pols(6, constant_policy(0.0));
    pols[1] = pols[3] = pols[5] = constant_policy(1.0);
    std::vector<NodeState> states(6, NodeState{2, 0});

    SUBCASE("all requests fit") {
        const ScheduleDecision d = near_stationary_schedule(states, pols, 6, rng);
        CHECK(d.granted == 3);
        CHECK(d.u[1] == 1);
        CHECK(d.u[3] == 1);
        CHECK(d.u[5] == 1);
        CHECK(d.u[0] == 0);
    }
    SUBCASE("single request under a generous cap") {
        std::vector<TransmitPolicy> one(6, constant_policy(0.0));
        one[2] = constant_policy(1.0);
        const ScheduleDecision d = near_stationary_schedule(states, one, 6, rng);
        CHECK(d.granted == 1);
        CHECK(d.u[2] == 1);
    }
    SUBCASE("no requests at all") {
        std::vector<TransmitPolicy> none(6, constant_policy(0.0));
        const ScheduleDecision d = near_stationary_schedule(states, none, 2, rng);
        CHECK(d.granted == 0);
    }
    SUBCASE("oversubscribed: a uniform 2-subset is granted") {
        long long grants[6] = {0, 0, 0, 0, 0, 0};
        const int trials = 60000;
        for (int t = 0; t < trials; ++t) {
            const ScheduleDecision d = near_stationary_schedule(states, pols, 2, rng);
            CHECK(d.granted == 2);
            for (int i = 0; i < 6; ++i) grants[i] += d.u[i];
        }
        CHECK(grants[0] == 0);
        CHECK(grants[2] == 0);
        CHECK(grants[4] == 0);
        // marginal grant probability for each requester is N/k = 2/3
        const double se = std::sqrt((2.0 / 3.0) * (1.0 / 3.0) / trials);
        for (int i : {1, 3, 5}) {
            const double frac = grants[i] / static_cast<double>(trials);
            CHECK(std::abs(frac - 2.0 / 3.0) < 3.0 * se);
        }
    }
}

TEST_CASE("near-stationary requests sample the policy probabilities") {
    Rng rng(321);
    std::vector<TransmitPolicy> pols{constant_policy(0.3)};
    std::vector<NodeState> states{NodeState{1, 0}};
    const int trials = 100000;
    long long sent = 0;
    for (int t = 0; t < trials; ++t)
        sent += near_stationary_schedule(states, pols, 1, rng).granted;
    const double se = std::sqrt(0.3 * 0.7 / trials);
    CHECK(std::abs(sent / static_cast<double>(trials) - 0.3) < 3.0 * se);
}

TEST_CASE("policy lookups clamp beyond the truncation bound") {
    Rng rng(9);
    std::vector<TransmitPolicy> pols{constant_policy(0.0, 3)};  // xi=0 below bound, 1 at it
    std::vector<NodeState> states{NodeState{11, 0}};            // far past the bound
    const ScheduleDecision d = near_stationary_schedule(states, pols, 1, rng);
    CHECK(d.granted == 1);
}

TEST_CASE("greedy scheduling") {
    SUBCASE("largest product of age and average weight wins") {
        std::vector<NodeState> states{{4, 0}, {1, 0}, {0, 0}};
        std::vector<double> w{1.0, 10.0, 100.0};
        const ScheduleDecision d = greedy_schedule(states, w, 1);
        CHECK(d.granted == 1);
        CHECK(d.u[1] == 1);
    }
    SUBCASE("synchronized nodes are never granted") {
        std::vector<NodeState> states{{0, 0}, {0, 0}, {0, 0}};
        std::vector<double> w{1.0, 1.0, 1.0};
        const ScheduleDecision d = greedy_schedule(states, w, 2);
        CHECK(d.granted == 0);
    }
    SUBCASE("ties go to the lower index") {
        std::vector<NodeState> states{{5, 0}, {10, 0}};
        std::vector<double> w{2.0, 1.0};  // both products equal 10
        const ScheduleDecision d = greedy_schedule(states, w, 1);
        CHECK(d.u[0] == 1);
        CHECK(d.u[1] == 0);
    }
    SUBCASE("cap respected with many desynchronized nodes") {
        std::vector<NodeState> states(10, NodeState{3, 0});
        std::vector<double> w(10, 1.0);
        const ScheduleDecision d = greedy_schedule(states, w, 4);
        CHECK(d.granted == 4);
        int total = 0;
        for (auto u : d.u) total += u;
        CHECK(total == 4);
        // equal products: the four lowest indices win
        for (int i = 0; i < 4; ++i) CHECK(d.u[i] == 1);
    }
}

TEST_CASE("average_weights composes the stationary distribution with omega") {
    NodeConfig n;
    n.lambda = 0.5;
    n.chain.R = 2;
    n.chain.P = {0.9, 0.1, 0.5, 0.5};
    n.chain.omega = {1.0, 7.0};
    std::vector<NodeConfig> nodes{n};
    const auto w = average_weights(nodes);
    // stationary (5/6, 1/6): mean = 5/6 + 7/6 = 2
    CHECK(w[0] == doctest::Approx(2.0).epsilon(1e-10));
}
