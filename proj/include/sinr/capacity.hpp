#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sinr/core.hpp"
#include "sinr/gain_matrix.hpp"

namespace sinr {

/// A multi-channel scheduling problem: links, per-channel eligibility, and one
/// gain matrix shared by all channels or one matrix per channel.
struct Instance {
    std::vector<Link> links;
    std::size_t channels = 1;

    /// Per channel, the ids of the links allowed on it. An empty outer vector
    /// means every link is eligible on every channel.
    std::vector<std::vector<std::size_t>> eligibility;

    /// One shared matrix, or `channels` matrices (index = channel).
    std::vector<GainMatrix> gains;

    Environment env;
    PowerAssignment powers = PowerAssignment::uniform();

    const GainMatrix& gains_for(std::size_t channel) const {
        return gains.size() == 1 ? gains.front() : gains.at(channel);
    }

    /// Matrix that defines the global link order (the shared matrix, or the
    /// first channel's when matrices differ per channel).
    const GainMatrix& order_gains() const { return gains.front(); }

    bool eligible(std::size_t channel, std::size_t link_id) const;
};

/// Result of a scheduling run. `assignment[i]` holds the link ids served on
/// channel i; the sets are disjoint. `candidates[i]` is the pre-filter set
/// X_i the greedy pass accepted, kept so the halving guarantee
/// 2*|assignment[i]| >= |candidates[i]| can be checked on every run.
struct Schedule {
    std::vector<std::vector<std::size_t>> assignment;
    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> unscheduled;

    bool markov_ok = false;      // halving guarantee held on every channel
    bool feasibility_ok = false; // every output channel set met the threshold

    std::size_t scheduled_count() const;
};

/// Greedy multi-channel scheduler. Processes links in ascending decay order;
/// a link joins the first channel where it is eligible and the accumulated
/// pairwise weight charged by that channel's earlier accepts stays at most
/// 1/2. A final per-channel filter keeps only links whose in-affectance
/// within their channel is at most 1. Throws if an output set violates the
/// threshold or the halving guarantee (cannot happen for valid input).
Schedule greedy_multichannel(const Instance& instance);

/// Exhaustive optimum for small instances: the largest total number of links
/// assignable to channels so that every channel set meets the threshold.
/// Throws when the instance exceeds `max_links` links or 4 channels.
std::size_t brute_force_opt(const Instance& instance, std::size_t max_links = 12);

/// Extracts a K-bi-feasible subset from a threshold-feasible input by
/// first-fit into ceil(4K) bins with per-link budgets (in-affectance 1/K,
/// out-affectance 2/K); links that fit in no bin are dropped. Returns the
/// largest bin (ties go to the lowest bin index).
std::vector<Link> strengthen(std::span<const Link> links, double k,
                             const GainMatrix& gains, const Environment& env);

struct HarnessParams {
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::size_t max_links = 10;  // links per instance drawn from [2, max_links]
    std::size_t channels = 2;
    double alpha = 3.0;
    double area_m = 10.0;
    double power_mw = 1.0;
    Environment env = Environment::from_dbm(-99.1, 2.15, 0.0);
};

struct HarnessTrial {
    std::uint64_t seed = 0;
    std::size_t n_links = 0;
    std::size_t greedy_size = 0;
    std::size_t opt_size = 0;
    double ratio = 0.0;    // opt / greedy, meaningful when not degenerate
    double zeta_max = 0.0; // metricity of the instance's gain matrix
    bool degenerate = false; // optimum is zero, ratio undefined
};

struct HarnessResult {
    std::vector<HarnessTrial> trials;
    std::size_t degenerate_count = 0;
    double ratio_min = 0.0;
    double ratio_median = 0.0;
    double ratio_max = 0.0;
};

/// Random geometric instances scheduled by both the greedy pass and the
/// exhaustive optimum; reports opt/greedy per trial together with the
/// instance's metricity. Trial t uses seed params.seed + t, so results do not
/// depend on thread count.
HarnessResult approximation_ratio_harness(const HarnessParams& params,
                                          bool parallel = true);

} // namespace sinr
