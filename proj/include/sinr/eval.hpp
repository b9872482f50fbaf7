#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sinr/core.hpp"

namespace sinr {

/// One measured transmission: a link observed under a set of concurrent
/// interfering links, with the packet reception rate seen on a channel.
struct Trial {
    Link link;
    std::vector<Link> interferers;
    double prr = 0.0;
    std::size_t channel = 0; // selects the matrix the trial was measured on
};

enum class Outcome { TP, FP, TN, FN, EXCLUDED };

struct RocPoint {
    double beta = 0.0;
    double tpr = 0.0; // NaN when no positives exist after exclusion
    double fpr = 0.0; // NaN when no negatives exist after exclusion
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0, excluded = 0;
};

inline constexpr double kDefaultPrrHigh = 0.8;
inline constexpr double kDefaultPrrLow = 0.2;

/// Quadrant of one trial: predicted success is SINR >= beta, observed success
/// is prr >= t_high, observed failure is prr <= t_low, and trials strictly
/// inside the (t_low, t_high) band are excluded. Positive/negative refer to
/// the observed class, true/false to whether the prediction matched, so
/// tpr = TP/(TP+FN) is sensitivity and fpr = FP/(FP+TN) is 1 - specificity.
Outcome classify_trial(const Trial& trial, std::span<const GainMatrix> gains,
                       const Environment& env, double beta,
                       double t_high = kDefaultPrrHigh, double t_low = kDefaultPrrLow);

/// One RocPoint per threshold in `beta_grid`, order preserved. Per-trial SINR
/// is computed once; grid points are independent.
std::vector<RocPoint> roc_sweep(std::span<const Trial> trials,
                                std::span<const GainMatrix> gains,
                                const Environment& env,
                                std::span<const double> beta_grid,
                                double t_high = kDefaultPrrHigh,
                                double t_low = kDefaultPrrLow, bool parallel = true);

/// Serial reference for roc_sweep; identical output.
std::vector<RocPoint> roc_sweep_serial(std::span<const Trial> trials,
                                       std::span<const GainMatrix> gains,
                                       const Environment& env,
                                       std::span<const double> beta_grid,
                                       double t_high = kDefaultPrrHigh,
                                       double t_low = kDefaultPrrLow);

/// Threshold maximizing Youden's J = tpr - fpr over the points where both
/// rates are defined; ties go to the smaller threshold. Throws when every
/// point has an undefined rate.
double best_beta(std::span<const RocPoint> points);

/// Total received power from all senders reachable at `receiver`, in dBm.
/// Summation happens in linear milliwatts; empty when no sender is reachable.
std::optional<double> predicted_combined_rss(std::span<const Link> senders,
                                             std::size_t receiver,
                                             const GainMatrix& gains);

/// Logarithmically spaced thresholds, endpoints included.
std::vector<double> make_log_grid(std::size_t n = 200, double lo = 1e-2,
                                  double hi = 1e4);

} // namespace sinr
