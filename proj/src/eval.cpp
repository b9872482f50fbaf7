#include "sinr/eval.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sinr/error.hpp"

namespace sinr {
namespace {

struct Classified {
    double sinr = 0.0;
    bool observed_success = false;
    bool excluded = false;
};

void check_band(double t_high, double t_low) {
    if (!(t_low <= t_high))
        throw error("prr band is inverted: t_low must not exceed t_high");
}

Classified evaluate_trial(const Trial& trial, std::span<const GainMatrix> gains,
                          const Environment& env, double t_high, double t_low) {
    if (!(trial.prr >= 0.0 && trial.prr <= 1.0))
        throw error("trial prr " + std::to_string(trial.prr) + " is outside [0,1]");
    for (const Link& w : trial.interferers)
        if (w.id == trial.link.id)
            throw error("trial link " + std::to_string(trial.link.id) +
                        " appears in its own interferer set");
    if (trial.channel >= gains.size())
        throw error("trial channel " + std::to_string(trial.channel) +
                    " has no gain matrix");

    Classified c;
    c.excluded = t_low < trial.prr && trial.prr < t_high;
    c.observed_success = trial.prr >= t_high;
    std::vector<Interferer> interferers;
    interferers.reserve(trial.interferers.size());
    for (const Link& w : trial.interferers) interferers.push_back({w.sender, w.power_mw});
    c.sinr = sinr_value(trial.link, interferers, gains[trial.channel], env);
    return c;
}

RocPoint count_point(std::span<const Classified> cs, double beta) {
    RocPoint p;
    p.beta = beta;
    for (const Classified& c : cs) {
        if (c.excluded) {
            ++p.excluded;
            continue;
        }
        const bool predicted = c.sinr >= beta;
        if (predicted && c.observed_success)
            ++p.tp;
        else if (predicted && !c.observed_success)
            ++p.fp; // predicted success, observed failure
        else if (!predicted && c.observed_success)
            ++p.fn; // predicted failure, observed success
        else
            ++p.tn;
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    p.tpr = (p.tp + p.fn) ? static_cast<double>(p.tp) / static_cast<double>(p.tp + p.fn)
                          : nan;
    p.fpr = (p.fp + p.tn) ? static_cast<double>(p.fp) / static_cast<double>(p.fp + p.tn)
                          : nan;
    return p;
}

std::vector<Classified> evaluate_all(std::span<const Trial> trials,
                                     std::span<const GainMatrix> gains,
                                     const Environment& env, double t_high,
                                     double t_low) {
    check_band(t_high, t_low);
    if (trials.empty()) throw error("no trials to classify");
    if (gains.empty()) throw error("no gain matrix for trials");
    std::vector<Classified> cs(trials.size());
    for (std::size_t i = 0; i < trials.size(); ++i)
        cs[i] = evaluate_trial(trials[i], gains, env, t_high, t_low);
    return cs;
}

} // namespace

Outcome classify_trial(const Trial& trial, std::span<const GainMatrix> gains,
                       const Environment& env, double beta, double t_high,
                       double t_low) {
    check_band(t_high, t_low);
    const Classified c = evaluate_trial(trial, gains, env, t_high, t_low);
    if (c.excluded) return Outcome::EXCLUDED;
    const bool predicted = c.sinr >= beta;
    if (predicted && c.observed_success) return Outcome::TP;
    if (predicted) return Outcome::FP;
    if (c.observed_success) return Outcome::FN;
    return Outcome::TN;
}

std::vector<RocPoint> roc_sweep_serial(std::span<const Trial> trials,
                                       std::span<const GainMatrix> gains,
                                       const Environment& env,
                                       std::span<const double> beta_grid,
                                       double t_high, double t_low) {
    if (beta_grid.empty()) throw error("empty threshold grid");
    const auto cs = evaluate_all(trials, gains, env, t_high, t_low);
    std::vector<RocPoint> out(beta_grid.size());
    for (std::size_t i = 0; i < beta_grid.size(); ++i)
        out[i] = count_point(cs, beta_grid[i]);
    return out;
}

std::vector<RocPoint> roc_sweep(std::span<const Trial> trials,
                                std::span<const GainMatrix> gains,
                                const Environment& env,
                                std::span<const double> beta_grid, double t_high,
                                double t_low, bool parallel) {
    if (!parallel) return roc_sweep_serial(trials, gains, env, beta_grid, t_high, t_low);
    if (beta_grid.empty()) throw error("empty threshold grid");
    const auto cs = evaluate_all(trials, gains, env, t_high, t_low);
    std::vector<RocPoint> out(beta_grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(beta_grid.size()); ++i)
        out[static_cast<std::size_t>(i)] =
            count_point(cs, beta_grid[static_cast<std::size_t>(i)]);
    return out;
}

double best_beta(std::span<const RocPoint> points) {
    bool found = false;
    double best_j = 0.0;
    double best = 0.0;
    for (const RocPoint& p : points) {
        if (std::isnan(p.tpr) || std::isnan(p.fpr)) continue;
        const double j = p.tpr - p.fpr;
        if (!found || j > best_j || (j == best_j && p.beta < best)) {
            found = true;
            best_j = j;
            best = p.beta;
        }
    }
    if (!found) throw error("every sweep point has an undefined rate");
    return best;
}

std::optional<double> predicted_combined_rss(std::span<const Link> senders,
                                             std::size_t receiver,
                                             const GainMatrix& gains) {
    double total_mw = 0.0;
    bool any = false;
    for (const Link& s : senders) {
        if (!gains.reachable(s.sender, receiver)) continue;
        total_mw += s.power_mw * gains.gain(s.sender, receiver);
        any = true;
    }
    if (!any) return std::nullopt;
    return mw_to_dbm(total_mw);
}

std::vector<double> make_log_grid(std::size_t n, double lo, double hi) {
    if (n == 0) throw error("threshold grid needs at least one point");
    if (!(lo > 0.0) || !(hi >= lo)) throw error("grid bounds must satisfy 0 < lo <= hi");
    std::vector<double> grid;
    grid.reserve(n);
    if (n == 1) {
        grid.push_back(lo);
        return grid;
    }
    const double llo = std::log10(lo);
    const double lhi = std::log10(hi);
    for (std::size_t i = 0; i < n; ++i)
        grid.push_back(std::pow(10.0, llo + (lhi - llo) * static_cast<double>(i) /
                                          static_cast<double>(n - 1)));
    return grid;
}

} // namespace sinr
