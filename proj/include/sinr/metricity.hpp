#pragma once

#include <cstddef>
#include <vector>

#include "sinr/gain_matrix.hpp"

namespace sinr {

struct PairZeta {
    std::size_t sender = 0;
    std::size_t receiver = 0;
    double zeta = 0.0;
};

/// Per-pair metricity values plus aggregates for one gain matrix.
struct MetricityReport {
    std::vector<PairZeta> pairs;      // row-major over reachable directed pairs
    std::vector<double> sorted_zetas; // ascending, one per entry of `pairs`
    double zeta_max = 0.0;
    double zeta_p95 = 0.0;
    double zeta_p99 = 0.0;
    double zeta0 = 0.0; // log2(f_max / f_min) over reachable pairs
    double floor = 1.0;
    std::size_t n_skipped = 0; // unreachable directed pairs (no zeta defined)

    /// Inclusive linear-interpolation percentile of the per-pair values.
    double percentile(double p) const;
};

/// Smallest exponent for which the decay between x and y is bounded by the
/// two-leg sum through witness z under the relaxed triangle inequality.
/// Returns `floor` when the constraint is vacuous (witness unreachable, or
/// the direct decay does not exceed both legs); otherwise the unique root,
/// located by bisection and reported from above so the inequality holds at
/// the returned value.
double zeta_triple(std::size_t x, std::size_t y, std::size_t z, const GainMatrix& gains,
                   double floor = 1.0);

/// Metricity of the directed pair (x,y): maximum of zeta_triple over all
/// witnesses z distinct from x and y; `floor` when no witness exists.
double zeta_pair(std::size_t x, std::size_t y, const GainMatrix& gains,
                 double floor = 1.0);

/// Per-pair zeta values for every reachable directed pair, serial reference
/// implementation.
std::vector<PairZeta> zeta_pairs_serial(const GainMatrix& gains, double floor = 1.0);

/// OpenMP version of zeta_pairs_serial; identical output, pairs are
/// independent and written by index.
std::vector<PairZeta> zeta_pairs(const GainMatrix& gains, double floor = 1.0);

/// Full report over all reachable directed pairs.
MetricityReport zeta_report(const GainMatrix& gains, double floor = 1.0,
                            bool parallel = true);

/// Report over the submatrix induced by `node_subset`; witnesses are
/// restricted to the subset.  Pair indices in the result refer to the
/// original matrix.
MetricityReport zeta_subset(const GainMatrix& gains,
                            const std::vector<std::size_t>& node_subset,
                            double floor = 1.0, bool parallel = true);

} // namespace sinr
