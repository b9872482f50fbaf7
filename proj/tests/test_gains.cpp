#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "sinr/error.hpp"
#include "sinr/gain_matrix.hpp"
#include "sinr/gains.hpp"

using namespace sinr;

TEST_CASE("dbm/mw conversions hit frozen reference values") {
    CHECK(dbm_to_mw(-99.1) == doctest::Approx(1.2302687708123812e-10).epsilon(1e-15));
    CHECK(dbm_to_mw(-55.0) == doctest::Approx(3.162277660168379e-06).epsilon(1e-15));
    CHECK(dbm_to_mw(-41.0) == doctest::Approx(7.943282347242822e-05).epsilon(1e-15));
    CHECK(dbm_to_mw(0.0) == 1.0);
    CHECK(mw_to_dbm(1.0) == 0.0);
    CHECK(mw_to_dbm(dbm_to_mw(-63.4)) == doctest::Approx(-63.4).epsilon(1e-12));
}

TEST_CASE("gain from RSS uses the reference transmit power") {
    // RSS -55 dBm at tx 0 dBm: gain = 10^-5.5
    CHECK(gain_from_rss_dbm(-55.0, 0.0) ==
          doctest::Approx(3.162277660168379e-06).epsilon(1e-15));
    // same RSS at tx 10 dBm halves the exponent sum
    CHECK(gain_from_rss_dbm(-55.0, 10.0) ==
          doctest::Approx(dbm_to_mw(-65.0)).epsilon(1e-15));
    CHECK(rss_dbm_from_gain(gain_from_rss_dbm(-41.0, 7.0), 7.0) ==
          doctest::Approx(-41.0).epsilon(1e-12));
}

namespace {

GainMatrix tiny_matrix() {
    GainMatrix m(3);
    m.set(0, 1, 1e-4);
    m.set(1, 0, 1.1e-6);
    m.set(0, 2, 2e-5);
    m.set(2, 0, 2e-5);
    // (1,2) and (2,1) stay unreachable
    return m;
}

} // namespace

TEST_CASE("matrix round-trips through the CSV format") {
    const GainMatrix m = tiny_matrix();
    std::stringstream s;
    write_rss_matrix(s, m, 3.0);
    const GainMatrix back = load_rss_matrix(s);
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(back.reachable(i, j) == m.reachable(i, j));
            if (m.reachable(i, j))
                CHECK(back.gain(i, j) == doctest::Approx(m.gain(i, j)).epsilon(1e-12));
        }
    CHECK(back.node_ids() == m.node_ids());
}

TEST_CASE("matrix file tx header is overridden by an explicit value") {
    std::stringstream s;
    s << "# tx_power_dbm=10\n"
         "node,a,b\n"
         "a,nan,-55\n"
         "b,-55,nan\n";
    SUBCASE("header applies by default") {
        const GainMatrix m = load_rss_matrix(s);
        CHECK(m.gain(0, 1) == doctest::Approx(dbm_to_mw(-65.0)).epsilon(1e-12));
    }
    SUBCASE("explicit parameter wins") {
        const GainMatrix m = load_rss_matrix(s, 0.0);
        CHECK(m.gain(0, 1) == doctest::Approx(dbm_to_mw(-55.0)).epsilon(1e-12));
    }
}

TEST_CASE("matrix loader rejects malformed input") {
    SUBCASE("missing header") {
        std::stringstream s("a,nan\n");
        CHECK_THROWS_AS((void)load_rss_matrix(s), error);
    }
    SUBCASE("row label out of order") {
        std::stringstream s("node,a,b\nb,nan,-50\na,-50,nan\n");
        CHECK_THROWS_AS((void)load_rss_matrix(s), error);
    }
    SUBCASE("ragged row") {
        std::stringstream s("node,a,b\na,nan\nb,-50,nan\n");
        CHECK_THROWS_AS((void)load_rss_matrix(s), error);
    }
    SUBCASE("missing row") {
        std::stringstream s("node,a,b\na,nan,-50\n");
        CHECK_THROWS_AS((void)load_rss_matrix(s), error);
    }
}

TEST_CASE("empty cells read as unreachable") {
    std::stringstream s("node,a,b\na,,-50\nb,-50,\n");
    const GainMatrix m = load_rss_matrix(s);
    CHECK_FALSE(m.reachable(0, 0));
    CHECK(m.reachable(0, 1));
}

TEST_CASE("geometric gain follows the power law exactly") {
    NodeLayout layout;
    layout.positions = {{0, 0, 0}, {1, 0, 0}, {0, 3, 0}};
    const GainMatrix m = geometric_gain(layout, 2.0);
    CHECK(m.gain(0, 1) == 1.0);
    CHECK(m.gain(0, 2) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(m.gain(1, 2) == m.gain(2, 1));
    CHECK_FALSE(m.reachable(1, 1));
}

TEST_CASE("geometric gain rejects coincident nodes and bad alpha") {
    NodeLayout layout;
    layout.positions = {{0, 0, 0}, {0, 0, 0}};
    CHECK_THROWS_AS((void)geometric_gain(layout, 2.0), error);
    NodeLayout ok;
    ok.positions = {{0, 0, 0}, {1, 0, 0}};
    CHECK_THROWS_AS((void)geometric_gain(ok, 0.0), error);
}

TEST_CASE("shadowed gain with zero spread is bit-identical to geometric") {
    NodeLayout layout;
    layout.positions = {{0, 0, 0}, {1.5, 0, 0}, {0.3, 2.2, 0}, {4, 4, 0}};
    const GainMatrix a = geometric_gain(layout, 2.7);
    const GainMatrix b = lognormal_gain(layout, 2.7, 0.0, 12345);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            CHECK(a.reachable(i, j) == b.reachable(i, j));
            if (a.reachable(i, j)) CHECK(a.gain(i, j) == b.gain(i, j));
        }
}

TEST_CASE("shadowing spread matches the requested sigma") {
    // With sigma in dB-like log space, 10*log10(g/d^-alpha) = -10*sigma*Z/ln(10)
    // ... the draw itself is sigma * standard normal in natural-log space.
    NodeLayout layout;
    const int side = 8;
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            layout.positions.push_back({double(i), double(j), 0.0});
    const double alpha = 3.0;
    const double sigma = 1.0;
    std::vector<double> residuals;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const GainMatrix geo = geometric_gain(layout, alpha);
        const GainMatrix sh = lognormal_gain(layout, alpha, sigma, seed);
        for (std::size_t a = 0; a < sh.size(); ++a)
            for (std::size_t b = 0; b < sh.size(); ++b)
                if (sh.reachable(a, b))
                    residuals.push_back(std::log(sh.gain(a, b) / geo.gain(a, b)));
    }
    REQUIRE(residuals.size() > 10000);
    const double mean =
        std::accumulate(residuals.begin(), residuals.end(), 0.0) / residuals.size();
    double ss = 0.0;
    for (double r : residuals) ss += (r - mean) * (r - mean);
    const double stddev = std::sqrt(ss / (residuals.size() - 1));
    CHECK(mean == doctest::Approx(0.0).epsilon(0.05).scale(1.0));
    CHECK(stddev == doctest::Approx(sigma).epsilon(0.05));
}

TEST_CASE("shadowed draws are deterministic per seed") {
    NodeLayout layout;
    layout.positions = {{0, 0, 0}, {1, 0, 0}, {2, 1, 0}};
    const GainMatrix a = lognormal_gain(layout, 3.0, 1.0, 7);
    const GainMatrix b = lognormal_gain(layout, 3.0, 1.0, 7);
    const GainMatrix c = lognormal_gain(layout, 3.0, 1.0, 8);
    CHECK(a == b);
    CHECK_FALSE(a == c);
}

TEST_CASE("median matrix: odd count picks the middle in dB") {
    std::vector<GainMatrix> ms;
    for (double dbm : {-50.0, -60.0, -70.0}) {
        GainMatrix m(2);
        m.set(0, 1, dbm_to_mw(dbm));
        m.set(1, 0, dbm_to_mw(dbm));
        ms.push_back(m);
    }
    const GainMatrix med = median_rss_matrix(ms);
    CHECK(mw_to_dbm(med.gain(0, 1)) == doctest::Approx(-60.0).epsilon(1e-12));
}

TEST_CASE("median matrix: even count takes the dB midpoint") {
    std::vector<GainMatrix> ms;
    for (double dbm : {-50.0, -70.0}) {
        GainMatrix m(2);
        m.set(0, 1, dbm_to_mw(dbm));
        m.set(1, 0, dbm_to_mw(dbm));
        ms.push_back(m);
    }
    const GainMatrix med = median_rss_matrix(ms);
    // sqrt(g1*g2) in linear space is the arithmetic mean in dB
    CHECK(mw_to_dbm(med.gain(0, 1)) == doctest::Approx(-60.0).epsilon(1e-12));
}

TEST_CASE("median matrix: strict unreachable majority wins") {
    auto make = [](bool reach, double dbm) {
        GainMatrix m(2);
        if (reach) m.set(0, 1, dbm_to_mw(dbm));
        m.set(1, 0, dbm_to_mw(-50.0));
        return m;
    };
    SUBCASE("2 of 3 unreachable: pair dropped") {
        std::vector<GainMatrix> ms = {make(false, 0), make(false, 0), make(true, -50)};
        CHECK_FALSE(median_rss_matrix(ms).reachable(0, 1));
    }
    SUBCASE("1 of 3 unreachable: median over the measured two") {
        std::vector<GainMatrix> ms = {make(false, 0), make(true, -50), make(true, -70)};
        const GainMatrix med = median_rss_matrix(ms);
        REQUIRE(med.reachable(0, 1));
        CHECK(mw_to_dbm(med.gain(0, 1)) == doctest::Approx(-60.0).epsilon(1e-12));
    }
    SUBCASE("1 of 2 unreachable: tie is not a strict majority") {
        std::vector<GainMatrix> ms = {make(false, 0), make(true, -50)};
        CHECK(median_rss_matrix(ms).reachable(0, 1));
    }
}

TEST_CASE("median matrix is invariant under input permutation") {
    std::vector<GainMatrix> ms;
    for (double dbm : {-40.0, -55.0, -61.0, -48.0}) {
        GainMatrix m(2);
        m.set(0, 1, dbm_to_mw(dbm));
        m.set(1, 0, dbm_to_mw(dbm - 3.0));
        ms.push_back(m);
    }
    const GainMatrix a = median_rss_matrix(ms);
    std::swap(ms[0], ms[3]);
    std::swap(ms[1], ms[2]);
    const GainMatrix b = median_rss_matrix(ms);
    CHECK(a == b);
}

TEST_CASE("median matrix rejects mismatched inputs") {
    std::vector<GainMatrix> ms;
    ms.emplace_back(2);
    ms.emplace_back(3);
    CHECK_THROWS_AS((void)median_rss_matrix(ms), error);
    CHECK_THROWS_AS((void)median_rss_matrix({}), error);
}

TEST_CASE("path-loss fit recovers a noiseless exponent exactly") {
    NodeLayout layout;
    layout.positions = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 4, 0}, {3, 3, 0}};
    const GainMatrix m = geometric_gain(layout, 2.18);
    const PathLossFit fit = fit_path_loss(layout, m);
    CHECK(fit.alpha == doctest::Approx(2.18).epsilon(1e-12));
    CHECK(fit.stderr_ == doctest::Approx(0.0).epsilon(1e-9).scale(1.0));
    CHECK(fit.n_points == layout.size() * (layout.size() - 1));
}

TEST_CASE("path-loss fit skips unreachable pairs") {
    NodeLayout layout;
    layout.positions = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
    GainMatrix m = geometric_gain(layout, 3.0);
    m.set_unreachable(0, 2);
    const PathLossFit fit = fit_path_loss(layout, m);
    CHECK(fit.alpha == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.n_points == 5);
}

TEST_CASE("path-loss fit needs at least two points") {
    NodeLayout layout;
    layout.positions = {{0, 0, 0}, {1, 0, 0}};
    GainMatrix m = geometric_gain(layout, 3.0);
    m.set_unreachable(0, 1);
    m.set_unreachable(1, 0);
    CHECK_THROWS_AS((void)fit_path_loss(layout, m), error);
}

TEST_CASE("induced submatrix keeps gains and ids") {
    GainMatrix m = tiny_matrix();
    m.set_node_ids({"n0", "n1", "n2"});
    const GainMatrix sub = m.induced({0, 2});
    REQUIRE(sub.size() == 2);
    CHECK(sub.gain(0, 1) == m.gain(0, 2));
    CHECK(sub.gain(1, 0) == m.gain(2, 0));
    CHECK(sub.node_ids() == std::vector<std::string>{"n0", "n2"});
}

TEST_CASE("transpose swaps directions and is an involution") {
    const GainMatrix m = tiny_matrix();
    const GainMatrix t = m.transposed();
    CHECK(t.gain(1, 0) == m.gain(0, 1));
    CHECK_FALSE(t.reachable(2, 1));
    CHECK(t.transposed() == m);
}
