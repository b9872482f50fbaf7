#include "sinr/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "sinr/error.hpp"
#include "sinr/gains.hpp"
#include "sinr/metricity.hpp"

namespace sinr {
namespace {

struct Prepared {
    std::vector<Link> links; // powers resolved
    LinkOrder order;
    std::vector<std::vector<char>> eligible; // [channel][link index]
};

Prepared prepare(const Instance& inst, bool require_monotone) {
    if (inst.channels == 0) throw error("instance needs at least one channel");
    if (inst.gains.empty())
        throw error("instance needs a gain matrix");
    if (inst.gains.size() != 1 && inst.gains.size() != inst.channels)
        throw error("instance needs one shared gain matrix or one per channel");
    for (const GainMatrix& g : inst.gains)
        if (g.size() != inst.gains.front().size())
            throw error("per-channel gain matrices must agree in dimension");
    if (!inst.eligibility.empty() && inst.eligibility.size() != inst.channels)
        throw error("eligibility must list every channel when given");

    validate_links(inst.links, inst.order_gains());

    std::unordered_map<std::size_t, std::size_t> by_id;
    for (std::size_t i = 0; i < inst.links.size(); ++i) {
        if (!by_id.emplace(inst.links[i].id, i).second)
            throw error("duplicate link id " + std::to_string(inst.links[i].id));
    }

    Prepared p;
    p.links = inst.links;
    const std::vector<double> powers = inst.powers.resolve(p.links, inst.order_gains());
    for (std::size_t i = 0; i < p.links.size(); ++i) p.links[i].power_mw = powers[i];
    if (require_monotone && !is_monotone_power(p.links, powers, inst.order_gains()))
        throw error("power assignment is not monotone in the link order");
    p.order = LinkOrder(p.links, inst.order_gains());

    p.eligible.assign(inst.channels,
                      std::vector<char>(p.links.size(), inst.eligibility.empty() ? 1 : 0));
    for (std::size_t c = 0; c < inst.eligibility.size(); ++c) {
        for (std::size_t id : inst.eligibility[c]) {
            auto it = by_id.find(id);
            if (it == by_id.end())
                throw error("eligibility references unknown link id " + std::to_string(id));
            p.eligible[c][it->second] = 1;
        }
    }
    for (std::size_t c = 0; c < inst.channels; ++c) {
        const GainMatrix& g = inst.gains_for(c);
        for (std::size_t i = 0; i < p.links.size(); ++i) {
            if (p.eligible[c][i] && !g.reachable(p.links[i].sender, p.links[i].receiver))
                throw error("link " + std::to_string(p.links[i].id) +
                            " is eligible on channel " + std::to_string(c) +
                            " but its own pair is unreachable there");
        }
    }
    return p;
}

// A link can be served on a channel only if its own pair is reachable there
// and its received power clears the noise floor with strict headroom.
bool usable_on(const Link& v, const GainMatrix& g, const Environment& env) {
    return g.reachable(v.sender, v.receiver) && is_noise_feasible(v, g, env);
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size();
    if (m % 2 == 1) return v[m / 2];
    return 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

} // namespace

bool Instance::eligible(std::size_t channel, std::size_t link_id) const {
    if (eligibility.empty()) return true;
    const auto& ids = eligibility.at(channel);
    return std::find(ids.begin(), ids.end(), link_id) != ids.end();
}

std::size_t Schedule::scheduled_count() const {
    std::size_t total = 0;
    for (const auto& s : assignment) total += s.size();
    return total;
}

Schedule greedy_multichannel(const Instance& instance) {
    const Prepared p = prepare(instance, /*require_monotone=*/true);
    const std::size_t k = instance.channels;

    std::vector<std::vector<std::size_t>> cand(k); // link indices, acceptance order
    for (std::size_t v : p.order.sequence()) {
        for (std::size_t c = 0; c < k; ++c) {
            if (!p.eligible[c][v]) continue;
            const GainMatrix& g = instance.gains_for(c);
            if (!usable_on(p.links[v], g, instance.env)) continue;
            if (w_plus_set(cand[c], v, p.links, p.order, g, instance.env) <= 0.5) {
                cand[c].push_back(v);
                break;
            }
        }
    }

    Schedule out;
    out.assignment.resize(k);
    out.candidates.resize(k);
    out.markov_ok = true;
    out.feasibility_ok = true;
    std::vector<char> placed(p.links.size(), 0);
    for (std::size_t c = 0; c < k; ++c) {
        const GainMatrix& g = instance.gains_for(c);
        std::vector<Link> members;
        members.reserve(cand[c].size());
        for (std::size_t i : cand[c]) members.push_back(p.links[i]);

        std::vector<Link> kept_links;
        for (std::size_t j = 0; j < members.size(); ++j) {
            out.candidates[c].push_back(members[j].id);
            if (affectance_on(members, members[j], g, instance.env) <= 1.0) {
                out.assignment[c].push_back(members[j].id);
                kept_links.push_back(members[j]);
                placed[cand[c][j]] = 1;
            }
        }
        if (2 * out.assignment[c].size() < out.candidates[c].size()) out.markov_ok = false;
        if (!is_feasible_sinr(kept_links, g, instance.env)) out.feasibility_ok = false;
    }
    for (std::size_t i = 0; i < p.links.size(); ++i)
        if (!placed[i]) out.unscheduled.push_back(p.links[i].id);

    if (!out.markov_ok) throw error("scheduler invariant violated: channel kept fewer than half its accepts");
    if (!out.feasibility_ok) throw error("scheduler invariant violated: output channel set misses the threshold");
    return out;
}

std::size_t brute_force_opt(const Instance& instance, std::size_t max_links) {
    if (instance.links.size() > max_links)
        throw error("instance too large for exhaustive search (" +
                    std::to_string(instance.links.size()) + " links, cap " +
                    std::to_string(max_links) + ")");
    if (instance.channels > 4)
        throw error("exhaustive search supports at most 4 channels");
    const Prepared p = prepare(instance, /*require_monotone=*/false);
    const std::size_t n = p.links.size();
    const std::size_t k = instance.channels;

    std::vector<std::vector<Link>> sets(k);
    std::size_t best = 0;

    auto dfs = [&](auto&& self, std::size_t idx, std::size_t count) -> void {
        if (count + (n - idx) <= best) return; // cannot beat the incumbent
        if (idx == n) {
            best = std::max(best, count);
            return;
        }
        const Link& v = p.links[idx];
        for (std::size_t c = 0; c < k; ++c) {
            if (!p.eligible[c][idx]) continue;
            const GainMatrix& g = instance.gains_for(c);
            if (!g.reachable(v.sender, v.receiver)) continue;
            sets[c].push_back(v);
            // Adding links only lowers ratios, so an infeasible partial set
            // can never become feasible again; pruning here is exact.
            if (is_feasible_sinr(sets[c], g, instance.env)) self(self, idx + 1, count + 1);
            sets[c].pop_back();
        }
        self(self, idx + 1, count);
    };
    dfs(dfs, 0, 0);
    return best;
}

std::vector<Link> strengthen(std::span<const Link> links, double k, const GainMatrix& gains,
                             const Environment& env) {
    if (!(k >= 1.0)) throw error("strength parameter must be at least 1");
    validate_links(links, gains);
    if (links.empty()) return {};
    for (const Link& v : links)
        if (!is_noise_feasible(v, gains, env))
            throw error("link " + std::to_string(v.id) + " lacks noise headroom");
    if (!is_feasible_sinr(links, gains, env))
        throw error("input set is not threshold-feasible");

    const std::size_t n = links.size();
    const std::size_t bins = static_cast<std::size_t>(std::ceil(4.0 * k));
    const double in_budget = 1.0 / k;
    const double out_budget = 2.0 / k;

    std::vector<double> a(n * n, 0.0); // a[w*n + v] = affectance of w on v
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            if (w != v) a[w * n + v] = affectance(links[w], links[v], gains, env);

    LinkOrder order(links, gains);
    std::vector<std::vector<std::size_t>> bin(bins);
    std::vector<double> in_acc(n, 0.0), out_acc(n, 0.0);

    for (std::size_t v : order.sequence()) {
        for (std::size_t b = 0; b < bins; ++b) {
            double in_v = 0.0, out_v = 0.0;
            for (std::size_t u : bin[b]) {
                in_v += a[u * n + v];
                out_v += a[v * n + u];
            }
            if (in_v > in_budget || out_v > out_budget) continue;
            bool members_ok = true;
            for (std::size_t u : bin[b]) {
                if (in_acc[u] + a[v * n + u] > in_budget ||
                    out_acc[u] + a[u * n + v] > out_budget) {
                    members_ok = false;
                    break;
                }
            }
            if (!members_ok) continue;
            for (std::size_t u : bin[b]) {
                in_acc[u] += a[v * n + u];
                out_acc[u] += a[u * n + v];
            }
            in_acc[v] = in_v;
            out_acc[v] = out_v;
            bin[b].push_back(v);
            break;
        }
    }

    std::size_t best = 0;
    for (std::size_t b = 1; b < bins; ++b)
        if (bin[b].size() > bin[best].size()) best = b;

    std::vector<Link> out;
    out.reserve(bin[best].size());
    for (std::size_t i : bin[best]) out.push_back(links[i]);
    if (!is_k_bi_feasible(out, k, gains, env))
        throw error("strengthen invariant violated: selected bin is not bi-feasible");
    return out;
}

namespace {

HarnessTrial run_trial(const HarnessParams& params, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> n_links_dist(2, params.max_links);
    std::uniform_real_distribution<double> coord(0.0, params.area_m);
    std::bernoulli_distribution half(0.5);

    const std::size_t n = n_links_dist(rng);
    NodeLayout layout;
    layout.positions.resize(2 * n);
    for (auto& pt : layout.positions) {
        pt.x = coord(rng);
        pt.y = coord(rng);
    }
    for (std::size_t i = 0; i < 2 * n; ++i) layout.ids.push_back(std::to_string(i));

    Instance inst;
    inst.channels = params.channels;
    inst.gains.push_back(geometric_gain(layout, params.alpha));
    inst.env = params.env;
    inst.powers = PowerAssignment::uniform(params.power_mw);
    for (std::size_t j = 0; j < n; ++j)
        inst.links.push_back(Link{j, 2 * j, 2 * j + 1, params.power_mw});

    inst.eligibility.assign(params.channels, {});
    for (std::size_t j = 0; j < n; ++j) {
        bool any = false;
        for (std::size_t c = 0; c < params.channels; ++c) {
            if (half(rng)) {
                inst.eligibility[c].push_back(j);
                any = true;
            }
        }
        if (!any)
            inst.eligibility[rng() % params.channels].push_back(j);
    }

    HarnessTrial t;
    t.seed = seed;
    t.n_links = n;
    t.greedy_size = greedy_multichannel(inst).scheduled_count();
    t.opt_size = brute_force_opt(inst, std::max<std::size_t>(params.max_links, 12));
    t.zeta_max = zeta_report(inst.gains.front(), 1.0, /*parallel=*/false).zeta_max;
    t.degenerate = (t.opt_size == 0);
    t.ratio = t.degenerate ? std::numeric_limits<double>::quiet_NaN()
                           : static_cast<double>(t.opt_size) /
                                 static_cast<double>(t.greedy_size);
    return t;
}

} // namespace

HarnessResult approximation_ratio_harness(const HarnessParams& params, bool parallel) {
    if (params.trials == 0) throw error("harness needs at least one trial");
    if (params.max_links < 2 || params.max_links > 12)
        throw error("harness link count must be between 2 and 12");
    if (params.channels == 0 || params.channels > 4)
        throw error("harness channel count must be between 1 and 4");

    HarnessResult res;
    res.trials.resize(params.trials);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(params.trials); ++t)
            res.trials[static_cast<std::size_t>(t)] =
                run_trial(params, params.seed + static_cast<std::uint64_t>(t));
    } else {
        for (std::size_t t = 0; t < params.trials; ++t)
            res.trials[t] = run_trial(params, params.seed + t);
    }

    std::vector<double> ratios;
    for (const HarnessTrial& t : res.trials) {
        if (t.degenerate)
            ++res.degenerate_count;
        else
            ratios.push_back(t.ratio);
    }
    if (ratios.empty()) {
        res.ratio_min = res.ratio_median = res.ratio_max =
            std::numeric_limits<double>::quiet_NaN();
    } else {
        res.ratio_min = *std::min_element(ratios.begin(), ratios.end());
        res.ratio_max = *std::max_element(ratios.begin(), ratios.end());
        res.ratio_median = median_of(ratios);
    }
    return res;
}

} // namespace sinr
