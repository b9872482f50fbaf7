#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "sinr/capacity.hpp"
#include "sinr/core.hpp"
#include "sinr/error.hpp"
#include "sinr/gain_matrix.hpp"

using namespace sinr;

namespace {

const Environment kEnv{9.765625e-04, 2.0, 0.0}; // noise 2^-10 mW, beta 2

// Two links whose mutual interference equals their own signal: each is fine
// alone (SINR 4) but the pair is infeasible together (SINR 0.8 < 2).
Instance conflicting_pair(std::size_t channels) {
    Instance inst;
    inst.channels = channels;
    GainMatrix m(4);
    const double g = std::pow(2.0, -8.0);
    m.set(0, 1, g);
    m.set(2, 3, g);
    m.set(2, 1, g);
    m.set(0, 3, g);
    inst.gains.push_back(m);
    inst.links = {{0, 0, 1, 1.0}, {1, 2, 3, 1.0}};
    inst.env = kEnv;
    return inst;
}

// n links with no cross interference at all.
Instance independent_links(std::size_t n, std::size_t channels = 1) {
    Instance inst;
    inst.channels = channels;
    GainMatrix m(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(2 * i, 2 * i + 1, std::pow(2.0, -8.0));
        inst.links.push_back({i, 2 * i, 2 * i + 1, 1.0});
    }
    inst.gains.push_back(m);
    inst.env = kEnv;
    return inst;
}

std::set<std::size_t> all_ids(const Instance& inst) {
    std::set<std::size_t> ids;
    for (const Link& l : inst.links) ids.insert(l.id);
    return ids;
}

void check_partition(const Instance& inst, const Schedule& s) {
    std::set<std::size_t> seen;
    for (const auto& ch : s.assignment)
        for (std::size_t id : ch) CHECK(seen.insert(id).second);
    for (std::size_t id : s.unscheduled) CHECK(seen.insert(id).second);
    CHECK(seen == all_ids(inst));
}

} // namespace

TEST_CASE("a lone feasible link is scheduled") {
    const Instance inst = independent_links(1);
    const Schedule s = greedy_multichannel(inst);
    REQUIRE(s.assignment.size() == 1);
    CHECK(s.assignment[0] == std::vector<std::size_t>{0});
    CHECK(s.unscheduled.empty());
    CHECK(s.markov_ok);
    CHECK(s.feasibility_ok);
}

TEST_CASE("independent links all share one channel") {
    const Instance inst = independent_links(6);
    const Schedule s = greedy_multichannel(inst);
    CHECK(s.scheduled_count() == 6);
    check_partition(inst, s);
}

TEST_CASE("a conflicting pair cannot share a channel") {
    const Instance one = conflicting_pair(1);
    const Schedule s1 = greedy_multichannel(one);
    CHECK(s1.scheduled_count() == 1);
    CHECK(s1.assignment[0] == std::vector<std::size_t>{0}); // first in order wins
    CHECK(s1.unscheduled == std::vector<std::size_t>{1});
    check_partition(one, s1);

    const Instance two = conflicting_pair(2);
    const Schedule s2 = greedy_multichannel(two);
    CHECK(s2.scheduled_count() == 2);
    CHECK(s2.assignment[0] == std::vector<std::size_t>{0});
    CHECK(s2.assignment[1] == std::vector<std::size_t>{1});
    check_partition(two, s2);
}

TEST_CASE("eligibility keeps a link off a channel") {
    Instance inst = independent_links(2, 2);
    inst.eligibility = {{0}, {0, 1}}; // link 1 may only use channel 1
    const Schedule s = greedy_multichannel(inst);
    CHECK(s.assignment[0] == std::vector<std::size_t>{0});
    CHECK(s.assignment[1] == std::vector<std::size_t>{1});

    inst.eligibility = {{0}, {0}}; // link 1 eligible nowhere
    const Schedule s2 = greedy_multichannel(inst);
    CHECK(s2.scheduled_count() == 1);
    CHECK(s2.unscheduled == std::vector<std::size_t>{1});
}

TEST_CASE("a noise-infeasible link is never scheduled") {
    Instance inst = independent_links(2);
    // weaken link 1 until beta * noise exceeds its received power
    inst.gains[0].set(2, 3, kEnv.noise_mw * kEnv.beta);
    const Schedule s = greedy_multichannel(inst);
    CHECK(s.scheduled_count() == 1);
    CHECK(s.unscheduled == std::vector<std::size_t>{1});
    CHECK(s.feasibility_ok);
}

TEST_CASE("per-channel matrices drive both gating and the final filter") {
    // Three equal-decay links; channel 0's matrix couples links 0 and 1,
    // channel 1's matrix couples links 1 and 2 and also links 0 and 2.
    Instance inst;
    inst.channels = 2;
    const double g = std::pow(2.0, -8.0);
    GainMatrix m0(6), m1(6);
    for (std::size_t i = 0; i < 3; ++i) {
        m0.set(2 * i, 2 * i + 1, g);
        m1.set(2 * i, 2 * i + 1, g);
    }
    m0.set(0, 3, g); // link 0 <-> link 1 conflict, channel 0 only
    m0.set(2, 1, g);
    m1.set(2, 5, g); // link 1 <-> link 2 conflict, channel 1 only
    m1.set(4, 3, g);
    m1.set(0, 5, g); // link 0 <-> link 2 conflict, channel 1 only
    m1.set(4, 1, g);
    inst.gains = {m0, m1};
    inst.links = {{0, 0, 1, 1.0}, {1, 2, 3, 1.0}, {2, 4, 5, 1.0}};
    inst.env = kEnv;

    // order is 0, 1, 2. Link 0 takes channel 0. Link 1 conflicts there on m0,
    // moves to channel 1. Link 2 is clean on channel 0 under m0 even though
    // m1 couples it to link 0; if channel 0 used m1 it would be rejected.
    const Schedule s = greedy_multichannel(inst);
    CHECK(s.assignment[0] == std::vector<std::size_t>{0, 2});
    CHECK(s.assignment[1] == std::vector<std::size_t>{1});
    CHECK(s.scheduled_count() == 3);
}

TEST_CASE("instance validation") {
    SUBCASE("no gain matrix") {
        Instance inst;
        inst.links = {{0, 0, 1, 1.0}};
        inst.env = kEnv;
        CHECK_THROWS_AS((void)greedy_multichannel(inst), error);
    }
    SUBCASE("matrix count must be 1 or channels") {
        Instance inst = independent_links(2, 3);
        inst.gains.push_back(inst.gains.front());
        CHECK_THROWS_AS((void)greedy_multichannel(inst), error);
    }
    SUBCASE("eligibility must cover every channel") {
        Instance inst = independent_links(2, 2);
        inst.eligibility = {{0, 1}};
        CHECK_THROWS_AS((void)greedy_multichannel(inst), error);
    }
    SUBCASE("duplicate link ids") {
        Instance inst = independent_links(2);
        inst.links[1].id = inst.links[0].id;
        CHECK_THROWS_AS((void)greedy_multichannel(inst), error);
    }
    SUBCASE("zero channels") {
        Instance inst = independent_links(2);
        inst.channels = 0;
        CHECK_THROWS_AS((void)greedy_multichannel(inst), error);
    }
    SUBCASE("eligible link unreachable on its channel's matrix") {
        Instance inst;
        inst.channels = 2;
        GainMatrix m0(4), m1(4);
        const double g = std::pow(2.0, -8.0);
        m0.set(0, 1, g);
        m0.set(2, 3, g);
        m1.set(0, 1, g); // link 1's own pair missing on channel 1
        inst.gains = {m0, m1};
        inst.links = {{0, 0, 1, 1.0}, {1, 2, 3, 1.0}};
        inst.env = kEnv;
        CHECK_THROWS_AS((void)greedy_multichannel(inst), error);
        inst.eligibility = {{0, 1}, {0}}; // restricting link 1 to channel 0 fixes it
        CHECK_NOTHROW((void)greedy_multichannel(inst));
    }
}

TEST_CASE("exhaustive optimum on crafted instances") {
    CHECK(brute_force_opt(independent_links(5)) == 5);
    CHECK(brute_force_opt(conflicting_pair(1)) == 1);
    CHECK(brute_force_opt(conflicting_pair(2)) == 2);
}

TEST_CASE("exhaustive optimum respects eligibility") {
    Instance inst = independent_links(2, 2);
    inst.eligibility = {{0}, {0}};
    CHECK(brute_force_opt(inst) == 1);
}

TEST_CASE("exhaustive search refuses oversized inputs") {
    CHECK_THROWS_AS((void)brute_force_opt(independent_links(13), 12), error);
    CHECK_THROWS_AS((void)brute_force_opt(independent_links(2, 5)), error);
}

TEST_CASE("the greedy result never beats the optimum") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        HarnessParams p;
        p.trials = 1;
        p.seed = seed;
        p.max_links = 6;
        p.channels = 2;
        const HarnessResult r = approximation_ratio_harness(p, false);
        REQUIRE(r.trials.size() == 1);
        const HarnessTrial& t = r.trials[0];
        CHECK(t.greedy_size <= t.opt_size);
        if (!t.degenerate) CHECK(t.ratio >= 1.0);
    }
}

TEST_CASE("harness runs are deterministic and thread-count independent") {
    HarnessParams p;
    p.trials = 12;
    p.seed = 42;
    p.max_links = 5;
    p.channels = 2;
    const HarnessResult a = approximation_ratio_harness(p, true);
    const HarnessResult b = approximation_ratio_harness(p, false);
    REQUIRE(a.trials.size() == b.trials.size());
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        CHECK(a.trials[i].seed == b.trials[i].seed);
        CHECK(a.trials[i].greedy_size == b.trials[i].greedy_size);
        CHECK(a.trials[i].opt_size == b.trials[i].opt_size);
        CHECK(a.trials[i].zeta_max == b.trials[i].zeta_max);
    }
    CHECK(a.ratio_median == b.ratio_median);
    CHECK(a.ratio_min == b.ratio_min);
    CHECK(a.ratio_max == b.ratio_max);
}

TEST_CASE("harness aggregates summarize the per-trial ratios") {
    HarnessParams p;
    p.trials = 9;
    p.seed = 7;
    p.max_links = 5;
    const HarnessResult r = approximation_ratio_harness(p, false);
    std::vector<double> ratios;
    for (const auto& t : r.trials)
        if (!t.degenerate) ratios.push_back(t.ratio);
    REQUIRE_FALSE(ratios.empty());
    std::sort(ratios.begin(), ratios.end());
    CHECK(r.ratio_min == ratios.front());
    CHECK(r.ratio_max == ratios.back());
    const std::size_t m = ratios.size();
    const double med = m % 2 ? ratios[m / 2] : 0.5 * (ratios[m / 2 - 1] + ratios[m / 2]);
    CHECK(r.ratio_median == med);
    CHECK(r.degenerate_count == r.trials.size() - ratios.size());
}

TEST_CASE("harness parameter validation") {
    HarnessParams p;
    p.trials = 0;
    CHECK_THROWS_AS((void)approximation_ratio_harness(p), error);
    p.trials = 1;
    p.max_links = 1;
    CHECK_THROWS_AS((void)approximation_ratio_harness(p), error);
    p.max_links = 20;
    CHECK_THROWS_AS((void)approximation_ratio_harness(p), error);
    p.max_links = 6;
    p.channels = 0;
    CHECK_THROWS_AS((void)approximation_ratio_harness(p), error);
}

TEST_CASE("strengthen extracts a balanced subset") {
    // four links in a row with moderate mutual coupling, feasible as a whole
    Instance inst = independent_links(4);
    GainMatrix& m = inst.gains[0];
    const double weak = std::pow(2.0, -14.0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) m.set(2 * i, 2 * j + 1, weak);
    REQUIRE(is_feasible_sinr(inst.links, m, kEnv));

    for (double k : {1.0, 2.0, 3.0}) {
        const std::vector<Link> out = strengthen(inst.links, k, m, kEnv);
        REQUIRE_FALSE(out.empty());
        CHECK(is_k_bi_feasible(out, k, m, kEnv));
        for (const Link& l : out)
            CHECK(std::any_of(inst.links.begin(), inst.links.end(),
                              [&](const Link& in) { return in.id == l.id; }));
    }
}

TEST_CASE("strengthen splits a set that is feasible but not strongly so") {
    // a chain where each link pushes affectance ~0.9 onto the next one:
    // feasible, but far from 4-bi-feasible, so the bins must separate links
    Instance inst = independent_links(6);
    GainMatrix& m = inst.gains[0];
    const double own = std::pow(2.0, -8.0);
    for (std::size_t i = 0; i + 1 < 6; ++i)
        m.set(2 * i, 2 * (i + 1) + 1, own * 0.2);
    REQUIRE(is_feasible_sinr(inst.links, m, kEnv));
    REQUIRE_FALSE(is_k_bi_feasible(inst.links, 4.0, m, kEnv));
    const std::vector<Link> out = strengthen(inst.links, 4.0, m, kEnv);
    REQUIRE_FALSE(out.empty());
    CHECK(is_k_bi_feasible(out, 4.0, m, kEnv));
    CHECK(out.size() < inst.links.size());
}

TEST_CASE("strengthen validates its input") {
    Instance inst = independent_links(2);
    SUBCASE("k below one") {
        CHECK_THROWS_AS((void)strengthen(inst.links, 0.5, inst.gains[0], kEnv), error);
    }
    SUBCASE("threshold-infeasible input") {
        GainMatrix& m = inst.gains[0];
        m.set(0, 3, std::pow(2.0, -8.0));
        m.set(2, 1, std::pow(2.0, -8.0));
        REQUIRE_FALSE(is_feasible_sinr(inst.links, m, kEnv));
        CHECK_THROWS_AS((void)strengthen(inst.links, 2.0, m, kEnv), error);
    }
    SUBCASE("empty input") {
        CHECK(strengthen({}, 2.0, inst.gains[0], kEnv).empty());
    }
}
