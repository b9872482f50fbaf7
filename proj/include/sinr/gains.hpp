#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sinr/gain_matrix.hpp"

namespace sinr {

/// Least-squares estimate of the path-loss exponent.
struct PathLossFit {
    double alpha = 0.0;   // fitted exponent
    double stderr_ = 0.0; // standard error of the slope
    std::size_t n_points = 0;
};

/// Convert a received signal strength in dBm to a linear gain relative to the
/// transmit power: 10^((rss - tx)/10).
double gain_from_rss_dbm(double rss_dbm, double tx_power_dbm);

/// Inverse of gain_from_rss_dbm.
double rss_dbm_from_gain(double gain, double tx_power_dbm);

/// Parse an RSS matrix from CSV. Format:
///   # tx_power_dbm=<float>          (optional)
///   node,<id_0>,...,<id_{n-1}>
///   <id_i>,<cell>,...               (n rows, row order == header order)
/// A cell is RSS in dBm, or `nan`/empty for an unreachable pair.
/// `tx_power_dbm` overrides the file header when given; the fallback when
/// neither is present is 0 dBm (1 mW reference).
GainMatrix load_rss_matrix(std::istream& in,
                           std::optional<double> tx_power_dbm = std::nullopt);

/// Write a gain matrix in the same CSV format (cells in dBm).
void write_rss_matrix(std::ostream& out, const GainMatrix& m, double tx_power_dbm);

/// Geometric path loss: gain(i,j) = d(i,j)^(-alpha), diagonal unreachable.
GainMatrix geometric_gain(const NodeLayout& layout, double alpha);

/// Geometric path loss with log-normal shadowing: each directed pair gets an
/// independent factor e^(-X), X ~ Normal(0, sigma^2), drawn from the seeded
/// generator. sigma = 0 reproduces geometric_gain bit for bit.
GainMatrix lognormal_gain(const NodeLayout& layout, double alpha, double sigma,
                          std::uint64_t seed);

/// Per-pair median across channels, taken in the dB domain over the channels
/// where the pair is reachable (even count: mean of the two middle dB values).
/// The output pair is unreachable iff it is unreachable on more than half of
/// the channels.
GainMatrix median_rss_matrix(const std::vector<GainMatrix>& matrices);

/// Ordinary least squares of 10*log10(gain) against -10*log10(distance) over
/// the reachable off-diagonal pairs; the slope is the path-loss exponent.
PathLossFit fit_path_loss(const NodeLayout& layout, const GainMatrix& gains);

} // namespace sinr
