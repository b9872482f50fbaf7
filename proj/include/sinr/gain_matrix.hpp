#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sinr/error.hpp"

namespace sinr {

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

/// Directed n-by-n matrix of linear-scale channel gains.
///
/// A gain is the dimensionless fraction of transmit power that arrives at the
/// receiving node; entries for pairs below the noise floor are absent
/// ("unreachable") rather than carrying a sentinel gain. The decay between two
/// nodes is the reciprocal of the gain.
class GainMatrix {
public:
    GainMatrix() = default;

    explicit GainMatrix(std::size_t n, std::string channel_id = {})
        : n_(n), cells_(n * n, std::nullopt), channel_id_(std::move(channel_id)) {
        node_ids_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) node_ids_.push_back(std::to_string(i));
    }

    std::size_t size() const { return n_; }
    const std::string& channel_id() const { return channel_id_; }
    void set_channel_id(std::string id) { channel_id_ = std::move(id); }

    const std::vector<std::string>& node_ids() const { return node_ids_; }
    void set_node_ids(std::vector<std::string> ids) {
        if (ids.size() != n_) throw error("node id count does not match matrix dimension");
        node_ids_ = std::move(ids);
    }

    bool reachable(std::size_t from, std::size_t to) const {
        return cells_[from * n_ + to].has_value();
    }

    /// Linear gain; the pair must be reachable.
    double gain(std::size_t from, std::size_t to) const {
        const auto& c = cells_[from * n_ + to];
        if (!c)
            throw error("gain requested for unreachable pair (" + std::to_string(from) +
                        "," + std::to_string(to) + ")");
        return *c;
    }

    std::optional<double> try_gain(std::size_t from, std::size_t to) const {
        return cells_[from * n_ + to];
    }

    /// Gain treated as zero when the pair is unreachable (interference rule).
    double gain_or_zero(std::size_t from, std::size_t to) const {
        const auto& c = cells_[from * n_ + to];
        return c ? *c : 0.0;
    }

    /// Signal decay f = 1/gain; the pair must be reachable.
    double decay(std::size_t from, std::size_t to) const { return 1.0 / gain(from, to); }

    void set(std::size_t from, std::size_t to, double gain_value) {
        if (!(gain_value > 0.0) || !std::isfinite(gain_value))
            throw error("gain must be finite and positive, got " + std::to_string(gain_value));
        cells_[from * n_ + to] = gain_value;
    }

    void set_unreachable(std::size_t from, std::size_t to) {
        cells_[from * n_ + to] = std::nullopt;
    }

    /// Transposed copy: gain(i,j) of the result equals gain(j,i) of *this.
    GainMatrix transposed() const {
        GainMatrix t(n_, channel_id_);
        t.node_ids_ = node_ids_;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t.cells_[j * n_ + i] = cells_[i * n_ + j];
        return t;
    }

    /// Submatrix induced by the given node indices, in the given order.
    GainMatrix induced(const std::vector<std::size_t>& nodes) const {
        GainMatrix s(nodes.size(), channel_id_);
        std::vector<std::string> ids;
        ids.reserve(nodes.size());
        for (std::size_t a = 0; a < nodes.size(); ++a) {
            if (nodes[a] >= n_) throw error("induced: node index out of range");
            ids.push_back(node_ids_[nodes[a]]);
            for (std::size_t b = 0; b < nodes.size(); ++b)
                s.cells_[a * nodes.size() + b] = cells_[nodes[a] * n_ + nodes[b]];
        }
        s.node_ids_ = std::move(ids);
        return s;
    }

    bool operator==(const GainMatrix& other) const {
        return n_ == other.n_ && cells_ == other.cells_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::optional<double>> cells_; // row-major, [from][to]
    std::vector<std::string> node_ids_;
    std::string channel_id_;
};

/// Node positions in meters (2D or 3D).
struct NodeLayout {
    struct Point {
        double x = 0.0, y = 0.0, z = 0.0;
    };
    std::vector<Point> positions;
    std::vector<std::string> ids;

    std::size_t size() const { return positions.size(); }

    double distance(std::size_t i, std::size_t j) const {
        const Point& a = positions[i];
        const Point& b = positions[j];
        const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
        return std::sqrt(dx * dx + dy * dy + dz * dz);
    }
};

} // namespace sinr
