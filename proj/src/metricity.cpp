#include "sinr/metricity.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "sinr/error.hpp"

namespace sinr {
namespace {

// Left side of the relaxed triangle inequality, rearranged so that the
// constraint reads h(zeta) >= 0.  r1 and r2 are the leg-to-direct decay
// ratios, both in (0,1] for a binding witness, so h is strictly increasing
// in zeta.
double h_of(double zeta, double log_r1, double log_r2) {
    return std::exp(log_r1 / zeta) + std::exp(log_r2 / zeta) - 1.0;
}

std::vector<std::pair<std::size_t, std::size_t>> reachable_pairs(const GainMatrix& gains) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = gains.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && gains.reachable(x, y)) out.emplace_back(x, y);
    return out;
}

} // namespace

double zeta_triple(std::size_t x, std::size_t y, std::size_t z, const GainMatrix& gains,
                   double floor) {
    if (x == y) throw error("zeta is undefined for a node paired with itself");
    if (z == x || z == y)
        throw error("witness must be distinct from both endpoints");
    if (!(floor > 0.0)) throw error("zeta floor must be positive");
    if (!gains.reachable(x, y))
        throw error("no decay defined for pair (" + std::to_string(x) + "," +
                    std::to_string(y) + ")");
    if (!gains.reachable(x, z) || !gains.reachable(z, y)) return floor;

    const double g_xy = gains.gain(x, y);
    const double g_xz = gains.gain(x, z);
    const double g_zy = gains.gain(z, y);

    // The constraint binds only when the direct decay exceeds both legs.
    if (!(g_xy < g_xz) || !(g_xy < g_zy)) return floor;

    // Ratios of leg decay to direct decay; computed in the linear domain so
    // a common scale factor on the matrix cancels exactly.
    const double log_r1 = std::log(g_xy / g_xz);
    const double log_r2 = std::log(g_xy / g_zy);

    if (h_of(floor, log_r1, log_r2) >= 0.0) return floor;

    // At zeta = -min(log_r)/log(2) the smaller ratio contributes exactly 1/2
    // and the larger at least 1/2, so h is nonnegative there.
    const double zeta_cap = -std::min(log_r1, log_r2) / std::log(2.0);
    double lo = floor;
    double hi = std::max(2.0 * floor, zeta_cap);
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-9 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (h_of(mid, log_r1, log_r2) >= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    // Report the upper end of the bracket so the inequality holds at the
    // returned value.
    return hi;
}

double zeta_pair(std::size_t x, std::size_t y, const GainMatrix& gains, double floor) {
    if (x == y) throw error("zeta is undefined for a node paired with itself");
    if (!gains.reachable(x, y))
        throw error("no decay defined for pair (" + std::to_string(x) + "," +
                    std::to_string(y) + ")");
    double best = floor;
    for (std::size_t z = 0; z < gains.size(); ++z) {
        if (z == x || z == y) continue;
        best = std::max(best, zeta_triple(x, y, z, gains, floor));
    }
    return best;
}

std::vector<PairZeta> zeta_pairs_serial(const GainMatrix& gains, double floor) {
    const auto pairs = reachable_pairs(gains);
    std::vector<PairZeta> out(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [x, y] = pairs[i];
        out[i] = PairZeta{x, y, zeta_pair(x, y, gains, floor)};
    }
    return out;
}

std::vector<PairZeta> zeta_pairs(const GainMatrix& gains, double floor) {
    const auto pairs = reachable_pairs(gains);
    std::vector<PairZeta> out(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pairs.size()); ++i) {
        const auto [x, y] = pairs[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] = PairZeta{x, y, zeta_pair(x, y, gains, floor)};
    }
    return out;
}

double MetricityReport::percentile(double p) const {
    if (sorted_zetas.empty()) throw error("percentile of an empty report");
    if (!(p >= 0.0 && p <= 100.0)) throw error("percentile must be in [0,100]");
    const std::size_t m = sorted_zetas.size();
    const double rank = p / 100.0 * static_cast<double>(m - 1);
    const std::size_t lo = static_cast<std::size_t>(rank);
    if (lo + 1 >= m) return sorted_zetas.back();
    const double frac = rank - static_cast<double>(lo);
    return sorted_zetas[lo] + frac * (sorted_zetas[lo + 1] - sorted_zetas[lo]);
}

MetricityReport zeta_report(const GainMatrix& gains, double floor, bool parallel) {
    if (!(floor > 0.0)) throw error("zeta floor must be positive");
    MetricityReport rep;
    rep.floor = floor;
    rep.pairs = parallel ? zeta_pairs(gains, floor) : zeta_pairs_serial(gains, floor);
    if (rep.pairs.empty()) throw error("gain matrix has no reachable pairs");

    const std::size_t n = gains.size();
    rep.n_skipped = n * (n - 1) - rep.pairs.size();

    double g_min = 0.0, g_max = 0.0;
    bool first = true;
    for (const auto& pz : rep.pairs) {
        const double g = gains.gain(pz.sender, pz.receiver);
        if (first) {
            g_min = g_max = g;
            first = false;
        } else {
            g_min = std::min(g_min, g);
            g_max = std::max(g_max, g);
        }
    }
    rep.zeta0 = std::log2(g_max / g_min);

    rep.sorted_zetas.reserve(rep.pairs.size());
    for (const auto& pz : rep.pairs) rep.sorted_zetas.push_back(pz.zeta);
    std::sort(rep.sorted_zetas.begin(), rep.sorted_zetas.end());
    rep.zeta_max = rep.sorted_zetas.back();
    rep.zeta_p95 = rep.percentile(95.0);
    rep.zeta_p99 = rep.percentile(99.0);
    return rep;
}

MetricityReport zeta_subset(const GainMatrix& gains,
                            const std::vector<std::size_t>& node_subset, double floor,
                            bool parallel) {
    if (node_subset.size() < 2) throw error("node subset needs at least two nodes");
    MetricityReport rep = zeta_report(gains.induced(node_subset), floor, parallel);
    for (auto& pz : rep.pairs) {
        pz.sender = node_subset[pz.sender];
        pz.receiver = node_subset[pz.receiver];
    }
    return rep;
}

} // namespace sinr
