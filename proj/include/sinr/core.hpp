#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "sinr/gain_matrix.hpp"

namespace sinr {

/// Constants of the reception model: ambient noise, SINR threshold, and the
/// reference transmit power used for RSS-to-gain conversion.
struct Environment {
    double noise_mw = 0.0;      // ambient noise N, linear milliwatts
    double beta = 1.0;          // reception threshold, dimensionless
    double tx_power_dbm = 0.0;  // reference transmit power for gain conversion

    static Environment from_dbm(double noise_dbm, double beta, double tx_power_dbm) {
        return Environment{dbm_to_mw(noise_dbm), beta, tx_power_dbm};
    }
};

/// A directed sender-receiver pair with its transmit power.
struct Link {
    std::size_t id = 0;
    std::size_t sender = 0;
    std::size_t receiver = 0;
    double power_mw = 1.0;
};

/// Validates the link-set invariants against the governing gain matrix.
void validate_links(std::span<const Link> links, const GainMatrix& gains);

/// Power strategies. `uniform` assigns the same power everywhere; `linear`
/// assigns power proportional to the link's own decay (so the received power
/// at zero interference is the constant); `explicit_values` carries a
/// per-link list.
struct PowerAssignment {
    enum class Kind { uniform, linear, explicit_values };
    Kind kind = Kind::uniform;
    double value = 1.0;          // uniform power in mW, or the linear constant C
    std::vector<double> values;  // per link-id powers for explicit_values

    static PowerAssignment uniform(double power_mw = 1.0) {
        return {Kind::uniform, power_mw, {}};
    }
    static PowerAssignment linear(double received_mw = 1.0) {
        return {Kind::linear, received_mw, {}};
    }
    static PowerAssignment explicit_powers(std::vector<double> powers) {
        return {Kind::explicit_values, 0.0, std::move(powers)};
    }

    /// Resolves to concrete per-link powers (index-aligned with `links`).
    std::vector<double> resolve(std::span<const Link> links, const GainMatrix& gains) const;
};

/// Total order on links by ascending own decay f_v = 1/gain(sender, receiver),
/// ties broken by ascending link id.
class LinkOrder {
public:
    LinkOrder() = default;
    LinkOrder(std::span<const Link> links, const GainMatrix& gains);

    /// Link indices (into the originating span), smallest decay first.
    const std::vector<std::size_t>& sequence() const { return seq_; }

    /// True iff links[a] strictly precedes links[b].
    bool precedes(std::size_t a, std::size_t b) const { return rank_[a] < rank_[b]; }

    std::size_t rank(std::size_t index) const { return rank_[index]; }
    std::size_t size() const { return seq_.size(); }

private:
    std::vector<std::size_t> seq_;
    std::vector<std::size_t> rank_;
};

/// An interference source: a transmitting node and its power.
struct Interferer {
    std::size_t sender = 0;
    double power_mw = 1.0;
};

/// Signal-to-interference-plus-noise ratio at `target` given concurrent
/// transmitters. Interference gains for unreachable sender-receiver pairs are
/// zero. Returns +infinity when the noise is zero and nothing interferes.
double sinr_value(const Link& target, std::span<const Interferer> interferers,
                  const GainMatrix& gains, const Environment& env);

/// SINR of `target` (a member of `set`) when the whole set transmits at once.
double sinr(std::span<const Link> set, const Link& target, const GainMatrix& gains,
            const Environment& env);

/// True iff every link in the set meets the threshold; vacuously true for the
/// empty set.
bool is_feasible_sinr(std::span<const Link> set, const GainMatrix& gains,
                      const Environment& env);

/// Noise headroom check: a link can tolerate interference only if its received
/// power strictly exceeds beta times the noise.
bool is_noise_feasible(const Link& link, const GainMatrix& gains, const Environment& env);

/// Affectance of link `w` on link `v`: the interference of w normalized to
/// v's signal strength and clamped to [0,1]. Zero for w == v and for
/// unreachable interference pairs. Throws for a noise-infeasible victim.
double affectance(const Link& w, const Link& v, const GainMatrix& gains,
                  const Environment& env);

/// In-affectance: sum of affectance(w, v) over w in `set` (self term excluded).
double affectance_on(std::span<const Link> set, const Link& v, const GainMatrix& gains,
                     const Environment& env);

/// Out-affectance: sum of affectance(v, w) over w in `set` (self term excluded).
double affectance_of(const Link& v, std::span<const Link> set, const GainMatrix& gains,
                     const Environment& env);

/// Budgeted feasibility grades: in-affectance at most 1/K per link,
/// out-affectance at most 2/K per link, or both.
bool is_k_feasible(std::span<const Link> set, double k, const GainMatrix& gains,
                   const Environment& env);
bool is_k_anti_feasible(std::span<const Link> set, double k, const GainMatrix& gains,
                        const Environment& env);
bool is_k_bi_feasible(std::span<const Link> set, double k, const GainMatrix& gains,
                      const Environment& env);

/// Pairwise weight charged from the smaller-decay link to the larger:
/// affectance(v,w) + affectance(w,v) when v precedes w, else 0.
/// `vi` and `wi` are indices into `links`.
double w_plus(std::size_t vi, std::size_t wi, std::span<const Link> links,
              const LinkOrder& order, const GainMatrix& gains, const Environment& env);

/// Sum of w_plus(w, v) over all w in X; only links preceding v contribute.
double w_plus_set(std::span<const std::size_t> x, std::size_t vi,
                  std::span<const Link> links, const LinkOrder& order,
                  const GainMatrix& gains, const Environment& env);

/// True iff the powers are both decay monotone (power non-decreasing in the
/// link order) and reception monotone (power/decay non-increasing).
bool is_monotone_power(std::span<const Link> links, std::span<const double> powers_mw,
                       const GainMatrix& gains);

/// Endpoint-swapped links over the transposed gain matrix. Powers and ids are
/// kept; applying the transform twice restores the original.
std::pair<std::vector<Link>, GainMatrix> dual_links(std::span<const Link> links,
                                                    const GainMatrix& gains);

inline constexpr double kUnboundedSinr = std::numeric_limits<double>::infinity();

} // namespace sinr
