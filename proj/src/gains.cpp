#include "sinr/gains.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "sinr/text.hpp"

namespace sinr {

double gain_from_rss_dbm(double rss_dbm, double tx_power_dbm) {
    return std::pow(10.0, (rss_dbm - tx_power_dbm) / 10.0);
}

double rss_dbm_from_gain(double gain, double tx_power_dbm) {
    return tx_power_dbm + 10.0 * std::log10(gain);
}

namespace {

bool cell_is_unreachable(const std::string& cell) {
    std::string t = text::trim(cell);
    return t.empty() || t == "nan" || t == "NaN" || t == "NAN";
}

} // namespace

GainMatrix load_rss_matrix(std::istream& in, std::optional<double> tx_power_dbm) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<double> file_tx;

    // optional "# tx_power_dbm=<float>" comment line
    if (!std::getline(in, line)) throw error("RSS matrix: empty input");
    ++lineno;
    if (!line.empty() && line[0] == '#') {
        const auto pos = line.find("tx_power_dbm=");
        if (pos != std::string::npos) {
            const std::string v = text::trim(line.substr(pos + 13));
            file_tx = text::parse_double(v, "RSS matrix line 1: tx_power_dbm");
        }
        if (!std::getline(in, line)) throw error("RSS matrix: missing header row");
        ++lineno;
    }

    const std::vector<std::string> header = text::split(line, ',');
    if (header.size() < 2 || text::trim(header[0]) != "node")
        throw error("RSS matrix line " + std::to_string(lineno) +
                    ": header must start with 'node,' followed by node ids");
    std::vector<std::string> ids(header.begin() + 1, header.end());
    for (auto& id : ids) id = text::trim(id);
    const std::size_t n = ids.size();

    const double tx = tx_power_dbm ? *tx_power_dbm : (file_tx ? *file_tx : 0.0);

    GainMatrix m(n);
    m.set_node_ids(ids);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw error("RSS matrix: expected " + std::to_string(n) + " data rows, got " +
                        std::to_string(i));
        ++lineno;
        const std::vector<std::string> cells = text::split(line, ',');
        if (cells.size() != n + 1)
            throw error("RSS matrix line " + std::to_string(lineno) + ": expected " +
                        std::to_string(n + 1) + " columns, got " +
                        std::to_string(cells.size()));
        if (text::trim(cells[0]) != ids[i])
            throw error("RSS matrix line " + std::to_string(lineno) + ": row label '" +
                        text::trim(cells[0]) + "' does not match header order (expected '" +
                        ids[i] + "')");
        for (std::size_t j = 0; j < n; ++j) {
            if (cell_is_unreachable(cells[j + 1])) {
                m.set_unreachable(i, j);
            } else {
                const double rss = text::parse_double(
                    cells[j + 1], "RSS matrix line " + std::to_string(lineno) + " column " +
                                      std::to_string(j + 2));
                m.set(i, j, gain_from_rss_dbm(rss, tx));
            }
        }
    }
    // anything but trailing blank lines is a dimension mismatch
    while (std::getline(in, line)) {
        if (!text::trim(line).empty())
            throw error("RSS matrix: more data rows than header columns (non-square table)");
    }
    return m;
}

void write_rss_matrix(std::ostream& out, const GainMatrix& m, double tx_power_dbm) {
    out << "# tx_power_dbm=" << text::format(tx_power_dbm) << "\n";
    out << "node";
    for (const auto& id : m.node_ids()) out << ',' << id;
    out << "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out << m.node_ids()[i];
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m.reachable(i, j))
                out << ',' << text::format(rss_dbm_from_gain(m.gain(i, j), tx_power_dbm));
            else
                out << ",nan";
        }
        out << "\n";
    }
}

GainMatrix geometric_gain(const NodeLayout& layout, double alpha) {
    if (!(alpha > 0.0)) throw error("geometric_gain: alpha must be positive");
    const std::size_t n = layout.size();
    GainMatrix m(n);
    if (!layout.ids.empty()) m.set_node_ids(layout.ids);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue; // diagonal stays unreachable
            const double d = layout.distance(i, j);
            if (d <= 0.0)
                throw error("geometric_gain: nodes " + std::to_string(i) + " and " +
                            std::to_string(j) + " are coincident (distance 0)");
            m.set(i, j, std::pow(d, -alpha));
        }
    }
    return m;
}

GainMatrix lognormal_gain(const NodeLayout& layout, double alpha, double sigma,
                          std::uint64_t seed) {
    if (sigma < 0.0) throw error("lognormal_gain: sigma must be non-negative");
    const std::size_t n = layout.size();
    GainMatrix m(n);
    if (!layout.ids.empty()) m.set_node_ids(layout.ids);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = layout.distance(i, j);
            if (d <= 0.0)
                throw error("lognormal_gain: nodes " + std::to_string(i) + " and " +
                            std::to_string(j) + " are coincident (distance 0)");
            // scaling the unit draw keeps sigma = 0 bit-identical to geometric
            const double x = sigma * unit(rng);
            m.set(i, j, std::pow(d, -alpha) * std::exp(-x));
        }
    }
    return m;
}

GainMatrix median_rss_matrix(const std::vector<GainMatrix>& matrices) {
    if (matrices.empty()) throw error("median_rss_matrix: no input matrices");
    const std::size_t n = matrices.front().size();
    for (const auto& m : matrices)
        if (m.size() != n)
            throw error("median_rss_matrix: dimension mismatch (" + std::to_string(m.size()) +
                        " vs " + std::to_string(n) + ")");

    GainMatrix out(n);
    out.set_node_ids(matrices.front().node_ids());
    std::vector<double> vals;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            vals.clear();
            for (const auto& m : matrices)
                if (auto g = m.try_gain(i, j)) vals.push_back(*g);
            const std::size_t unreachable = matrices.size() - vals.size();
            if (unreachable * 2 > matrices.size()) continue; // strict majority rule
            if (vals.empty()) continue;
            // dB median == linear median for odd counts, so pick the middle
            // element as-is; the even case is the dB midpoint, i.e. the
            // geometric mean of the two middle gains.
            std::sort(vals.begin(), vals.end());
            const std::size_t k = vals.size();
            if (k % 2 == 1)
                out.set(i, j, vals[k / 2]);
            else
                out.set(i, j, std::sqrt(vals[k / 2 - 1] * vals[k / 2]));
        }
    }
    return out;
}

PathLossFit fit_path_loss(const NodeLayout& layout, const GainMatrix& gains) {
    if (layout.size() != gains.size())
        throw error("fit_path_loss: layout and gain matrix dimensions differ");
    std::vector<double> xs, ys; // x = -10 log10 d, y = 10 log10 g
    for (std::size_t i = 0; i < gains.size(); ++i) {
        for (std::size_t j = 0; j < gains.size(); ++j) {
            if (i == j || !gains.reachable(i, j)) continue;
            const double d = layout.distance(i, j);
            if (d <= 0.0) continue;
            xs.push_back(-10.0 * std::log10(d));
            ys.push_back(10.0 * std::log10(gains.gain(i, j)));
        }
    }
    const std::size_t n = xs.size();
    if (n < 2) throw error("fit_path_loss: need at least 2 reachable pairs, got " +
                           std::to_string(n));
    const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
    if (*xmin == *xmax)
        throw error("fit_path_loss: all pair distances are equal, slope is undefined");

    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;

    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (slope * xs[i] + intercept);
        sse += r * r;
    }
    PathLossFit fit;
    fit.alpha = slope;
    fit.n_points = n;
    fit.stderr_ = n > 2 ? std::sqrt(sse / static_cast<double>(n - 2) / sxx) : 0.0;
    return fit;
}

} // namespace sinr
