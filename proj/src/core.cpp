#include "sinr/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sinr/error.hpp"

namespace sinr {

void validate_links(std::span<const Link> links, const GainMatrix& gains) {
    for (const Link& l : links) {
        if (l.sender == l.receiver)
            throw error("link " + std::to_string(l.id) + ": sender equals receiver");
        if (!(l.power_mw > 0.0))
            throw error("link " + std::to_string(l.id) + ": power must be positive");
        if (l.sender >= gains.size() || l.receiver >= gains.size())
            throw error("link " + std::to_string(l.id) + ": endpoint out of range");
        if (!gains.reachable(l.sender, l.receiver))
            throw error("link " + std::to_string(l.id) + ": pair (" +
                        std::to_string(l.sender) + "," + std::to_string(l.receiver) +
                        ") is unreachable in the gain matrix");
    }
}

std::vector<double> PowerAssignment::resolve(std::span<const Link> links,
                                             const GainMatrix& gains) const {
    std::vector<double> out;
    out.reserve(links.size());
    switch (kind) {
        case Kind::uniform:
            out.assign(links.size(), value);
            break;
        case Kind::linear:
            for (const Link& l : links) out.push_back(value * gains.decay(l.sender, l.receiver));
            break;
        case Kind::explicit_values:
            for (const Link& l : links) {
                if (l.id >= values.size())
                    throw error("explicit power assignment has no entry for link " +
                                std::to_string(l.id));
                out.push_back(values[l.id]);
            }
            break;
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!(out[i] > 0.0))
            throw error("resolved power for link " + std::to_string(links[i].id) +
                        " is not positive");
    return out;
}

LinkOrder::LinkOrder(std::span<const Link> links, const GainMatrix& gains) {
    seq_.resize(links.size());
    for (std::size_t i = 0; i < links.size(); ++i) seq_[i] = i;
    std::stable_sort(seq_.begin(), seq_.end(), [&](std::size_t a, std::size_t b) {
        const double fa = gains.decay(links[a].sender, links[a].receiver);
        const double fb = gains.decay(links[b].sender, links[b].receiver);
        if (fa != fb) return fa < fb;
        return links[a].id < links[b].id;
    });
    rank_.resize(links.size());
    for (std::size_t r = 0; r < seq_.size(); ++r) rank_[seq_[r]] = r;
}

double sinr_value(const Link& target, std::span<const Interferer> interferers,
                  const GainMatrix& gains, const Environment& env) {
    const double signal = target.power_mw * gains.gain(target.sender, target.receiver);
    double denom = env.noise_mw;
    for (const Interferer& it : interferers)
        denom += it.power_mw * gains.gain_or_zero(it.sender, target.receiver);
    if (denom == 0.0) return kUnboundedSinr;
    return signal / denom;
}

double sinr(std::span<const Link> set, const Link& target, const GainMatrix& gains,
            const Environment& env) {
    bool found = false;
    std::vector<Interferer> others;
    others.reserve(set.size());
    for (const Link& l : set) {
        if (l.id == target.id) {
            found = true;
            continue;
        }
        others.push_back({l.sender, l.power_mw});
    }
    if (!found) throw error("sinr: target link " + std::to_string(target.id) +
                            " is not a member of the transmitting set");
    return sinr_value(target, others, gains, env);
}

bool is_feasible_sinr(std::span<const Link> set, const GainMatrix& gains,
                      const Environment& env) {
    for (const Link& l : set)
        if (!(sinr(set, l, gains, env) >= env.beta)) return false;
    return true;
}

bool is_noise_feasible(const Link& link, const GainMatrix& gains, const Environment& env) {
    return link.power_mw * gains.gain(link.sender, link.receiver) >
           env.beta * env.noise_mw;
}

namespace {

// beta / (1 - beta*N / (P_v * G_vv)); requires noise headroom.
double noise_constant(const Link& v, const GainMatrix& gains, const Environment& env) {
    const double received = v.power_mw * gains.gain(v.sender, v.receiver);
    if (!(received > env.beta * env.noise_mw))
        throw error("link " + std::to_string(v.id) +
                    " is noise-infeasible: received power " + std::to_string(received) +
                    " mW does not exceed beta*noise");
    return env.beta / (1.0 - env.beta * env.noise_mw / received);
}

} // namespace

double affectance(const Link& w, const Link& v, const GainMatrix& gains,
                  const Environment& env) {
    if (w.id == v.id) return 0.0;
    const double c = noise_constant(v, gains, env);
    if (!gains.reachable(w.sender, v.receiver)) return 0.0;
    const double cross = w.power_mw * gains.gain(w.sender, v.receiver);
    const double own = v.power_mw * gains.gain(v.sender, v.receiver);
    return std::min(1.0, c * cross / own);
}

double affectance_on(std::span<const Link> set, const Link& v, const GainMatrix& gains,
                     const Environment& env) {
    double sum = 0.0;
    for (const Link& w : set) sum += affectance(w, v, gains, env);
    return sum;
}

double affectance_of(const Link& v, std::span<const Link> set, const GainMatrix& gains,
                     const Environment& env) {
    double sum = 0.0;
    for (const Link& w : set) sum += affectance(v, w, gains, env);
    return sum;
}

bool is_k_feasible(std::span<const Link> set, double k, const GainMatrix& gains,
                   const Environment& env) {
    if (k < 1.0) throw error("is_k_feasible: K must be at least 1");
    for (const Link& v : set)
        if (!(affectance_on(set, v, gains, env) <= 1.0 / k)) return false;
    return true;
}

bool is_k_anti_feasible(std::span<const Link> set, double k, const GainMatrix& gains,
                        const Environment& env) {
    if (k < 1.0) throw error("is_k_anti_feasible: K must be at least 1");
    for (const Link& v : set)
        if (!(affectance_of(v, set, gains, env) <= 2.0 / k)) return false;
    return true;
}

bool is_k_bi_feasible(std::span<const Link> set, double k, const GainMatrix& gains,
                      const Environment& env) {
    return is_k_feasible(set, k, gains, env) && is_k_anti_feasible(set, k, gains, env);
}

double w_plus(std::size_t vi, std::size_t wi, std::span<const Link> links,
              const LinkOrder& order, const GainMatrix& gains, const Environment& env) {
    if (vi == wi || !order.precedes(vi, wi)) return 0.0;
    return affectance(links[vi], links[wi], gains, env) +
           affectance(links[wi], links[vi], gains, env);
}

double w_plus_set(std::span<const std::size_t> x, std::size_t vi,
                  std::span<const Link> links, const LinkOrder& order,
                  const GainMatrix& gains, const Environment& env) {
    double sum = 0.0;
    for (std::size_t wi : x) sum += w_plus(wi, vi, links, order, gains, env);
    return sum;
}

bool is_monotone_power(std::span<const Link> links, std::span<const double> powers_mw,
                       const GainMatrix& gains) {
    if (links.size() != powers_mw.size())
        throw error("is_monotone_power: powers not index-aligned with links");
    const LinkOrder order(links, gains);
    const auto& seq = order.sequence();
    for (std::size_t a = 0; a + 1 < seq.size(); ++a) {
        const std::size_t v = seq[a], w = seq[a + 1];
        const double fv = gains.decay(links[v].sender, links[v].receiver);
        const double fw = gains.decay(links[w].sender, links[w].receiver);
        if (powers_mw[v] > powers_mw[w]) return false;                  // decay monotone
        if (powers_mw[w] / fw > powers_mw[v] / fv) return false;        // reception monotone
    }
    return true;
}

std::pair<std::vector<Link>, GainMatrix> dual_links(std::span<const Link> links,
                                                    const GainMatrix& gains) {
    std::vector<Link> duals;
    duals.reserve(links.size());
    for (const Link& l : links) duals.push_back({l.id, l.receiver, l.sender, l.power_mw});
    return {std::move(duals), gains.transposed()};
}

} // namespace sinr
