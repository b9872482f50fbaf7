#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "sinr/capacity.hpp"
#include "sinr/core.hpp"
#include "sinr/csv_io.hpp"
#include "sinr/error.hpp"
#include "sinr/eval.hpp"
#include "sinr/gains.hpp"
#include "sinr/metricity.hpp"
#include "sinr/text.hpp"

using nlohmann::json;

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw sinr::error("cannot open input file: " + path);
    return f;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw sinr::error("cannot open output file for writing: " + path);
    return f;
}

void finish_output(std::ofstream& f, const std::string& path) {
    f.flush();
    if (!f.good()) throw sinr::error("failed while writing: " + path);
}

/// Environment flags shared by the subcommands. Precedence: built-in defaults,
/// then --env-config file, then explicit flags.
struct EnvOpts {
    double noise_dbm = -99.1;
    double beta = 2.15;
    double tx_power_dbm = 0.0;
    std::string config_path;
    CLI::Option* noise_opt = nullptr;
    CLI::Option* beta_opt = nullptr;
    CLI::Option* tx_opt = nullptr;
    bool tx_explicit = false;

    void attach(CLI::App& cmd) {
        cmd.add_option("--env-config", config_path,
                       "key=value file with noise_dbm, beta, tx_power_dbm");
        noise_opt = cmd.add_option("--noise-dbm", noise_dbm, "ambient noise floor in dBm")
                        ->capture_default_str();
        beta_opt = cmd.add_option("--beta", beta, "SINR reception threshold")
                       ->capture_default_str();
        tx_opt = cmd.add_option("--tx-power-dbm", tx_power_dbm,
                                "reference transmit power in dBm")
                     ->capture_default_str();
    }

    void resolve() {
        tx_explicit = tx_opt->count() > 0;
        if (config_path.empty()) return;
        auto f = open_input(config_path);
        const sinr::EnvConfigFile file = sinr::load_env_config(f);
        if (file.noise_dbm && noise_opt->count() == 0) noise_dbm = *file.noise_dbm;
        if (file.beta && beta_opt->count() == 0) beta = *file.beta;
        if (file.tx_power_dbm && tx_opt->count() == 0) {
            tx_power_dbm = *file.tx_power_dbm;
            tx_explicit = true;
        }
    }

    sinr::Environment environment() const {
        return sinr::Environment::from_dbm(noise_dbm, beta, tx_power_dbm);
    }

    /// Value that overrides a matrix file's own tx_power_dbm header, if any.
    std::optional<double> tx_override() const {
        if (tx_explicit) return tx_power_dbm;
        return std::nullopt;
    }

    json to_json() const {
        return {{"noise_dbm", noise_dbm},
                {"beta", beta},
                {"tx_power_dbm", tx_power_dbm}};
    }
};

struct ThreadOpt {
    int threads = 0;

    void attach(CLI::App& cmd) {
        cmd.add_option("--threads", threads, "worker thread cap (0 = library default)");
    }

    void apply() const {
#ifdef _OPENMP
        if (threads > 0) omp_set_num_threads(threads);
#endif
    }
};

/// Prints the one-line summary and writes it to `explicit_path`, or next to
/// the primary output file when only that is known.
void emit_summary(const json& summary, const std::string& explicit_path,
                  const std::string& anchor) {
    std::cout << summary.dump() << "\n";
    std::string path = explicit_path;
    if (path.empty() && !anchor.empty()) path = anchor + ".summary.json";
    if (path.empty()) return;
    auto f = open_output(path);
    f << summary.dump() << "\n";
    finish_output(f, path);
}

sinr::GainMatrix load_gain_file(const std::string& path,
                                std::optional<double> tx_override) {
    auto f = open_input(path);
    try {
        return sinr::load_rss_matrix(f, tx_override);
    } catch (const sinr::error& e) {
        throw sinr::error(path + ": " + e.what());
    }
}

sinr::NodeLayout grid4x5_layout(double spacing) {
    if (!(spacing > 0.0)) throw sinr::error("--spacing must be positive");
    sinr::NodeLayout layout;
    for (std::size_t i = 0; i < 20; ++i) {
        layout.positions.push_back({static_cast<double>(i % 4) * spacing,
                                    static_cast<double>(i / 4) * spacing, 0.0});
        layout.ids.push_back(std::to_string(i));
    }
    return layout;
}

// 60 nodes evenly spaced on a semicircular arc of arc length 40 m.
sinr::NodeLayout arc60_layout() {
    sinr::NodeLayout layout;
    const double pi = std::acos(-1.0);
    const double radius = 40.0 / pi;
    for (std::size_t i = 0; i < 60; ++i) {
        const double theta = pi * static_cast<double>(i) / 59.0;
        layout.positions.push_back({radius * std::cos(theta), radius * std::sin(theta), 0.0});
        layout.ids.push_back(std::to_string(i));
    }
    return layout;
}

// ---------------------------------------------------------------- generate

struct GenerateCmd {
    std::string layout_name, layout_file, out, layout_out, summary;
    double spacing = 1.0, alpha = 2.18, sigma = 0.0;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    EnvOpts env;

    void attach(CLI::App& app) {
        CLI::App* cmd = app.add_subcommand(
            "generate", "produce a synthetic RSS matrix for a node layout");
        auto* ln = cmd->add_option("--layout", layout_name,
                                   "built-in layout: grid4x5 or arc60");
        auto* lf = cmd->add_option("--layout-file", layout_file, "layout CSV (id,x,y[,z])");
        ln->excludes(lf);
        cmd->add_option("--spacing", spacing, "grid spacing in meters")
            ->capture_default_str();
        cmd->add_option("--alpha", alpha, "path-loss exponent")->capture_default_str();
        cmd->add_option("--sigma", sigma, "log-normal shadowing spread (0 = none)")
            ->capture_default_str();
        seed_opt = cmd->add_option("--seed", seed, "RNG seed (required when --sigma > 0)");
        cmd->add_option("--out", out, "output RSS matrix CSV")->required();
        cmd->add_option("--layout-out", layout_out, "also write the layout CSV here");
        cmd->add_option("--summary", summary, "summary JSON path");
        env.attach(*cmd);
        cmd->callback([this] { run(); });
    }

    void run() {
        env.resolve();
        if (sigma < 0.0) throw sinr::error("--sigma must be non-negative");
        if (sigma > 0.0 && seed_opt->count() == 0)
            throw sinr::error("--seed is required when --sigma > 0");

        sinr::NodeLayout layout;
        if (!layout_file.empty()) {
            auto f = open_input(layout_file);
            layout = sinr::load_layout(f);
        } else if (layout_name == "grid4x5") {
            layout = grid4x5_layout(spacing);
        } else if (layout_name == "arc60") {
            layout = arc60_layout();
        } else if (layout_name.empty()) {
            throw sinr::error("one of --layout or --layout-file is required");
        } else {
            throw sinr::error("unknown layout '" + layout_name +
                              "' (available: grid4x5, arc60)");
        }

        const sinr::GainMatrix m = sinr::lognormal_gain(layout, alpha, sigma, seed);
        {
            auto f = open_output(out);
            sinr::write_rss_matrix(f, m, env.tx_power_dbm);
            finish_output(f, out);
        }
        if (!layout_out.empty()) {
            auto f = open_output(layout_out);
            sinr::write_layout(f, layout);
            finish_output(f, layout_out);
        }

        json config = {{"subcommand", "generate"},
                       {"layout", layout_file.empty() ? layout_name : layout_file},
                       {"spacing", spacing},
                       {"alpha", alpha},
                       {"sigma", sigma},
                       {"seed", seed},
                       {"out", out},
                       {"env", env.to_json()}};
        emit_summary({{"config", config}, {"n_nodes", layout.size()}}, summary, out);
    }
};

// -------------------------------------------------------------------- zeta

struct ZetaCmd {
    std::string gains, pairs_out, cdf_out, json_out, summary;
    double floor = 1.0;
    EnvOpts env;
    ThreadOpt threads;

    void attach(CLI::App& app) {
        CLI::App* cmd =
            app.add_subcommand("zeta", "metricity report for a gain matrix");
        cmd->add_option("--gains", gains, "RSS matrix CSV")->required();
        cmd->add_option("--floor", floor, "lower bound for zeta")->capture_default_str();
        cmd->add_option("--pairs-out", pairs_out, "per-pair CSV (sender,receiver,zeta)");
        cmd->add_option("--cdf-out", cdf_out, "CDF CSV (zeta,cumulative_fraction)");
        cmd->add_option("--json-out", json_out, "aggregate JSON file");
        cmd->add_option("--summary", summary, "summary JSON path");
        env.attach(*cmd);
        threads.attach(*cmd);
        cmd->callback([this] { run(); });
    }

    void run() {
        env.resolve();
        threads.apply();
        const sinr::GainMatrix m = load_gain_file(gains, env.tx_override());
        const sinr::MetricityReport rep = sinr::zeta_report(m, floor);

        if (!pairs_out.empty()) {
            auto f = open_output(pairs_out);
            sinr::write_zeta_pairs_csv(f, rep, m);
            finish_output(f, pairs_out);
        }
        if (!cdf_out.empty()) {
            auto f = open_output(cdf_out);
            sinr::write_zeta_cdf_csv(f, rep);
            finish_output(f, cdf_out);
        }
        json aggregate = {{"zeta_max", rep.zeta_max}, {"zeta_p95", rep.zeta_p95},
                          {"zeta_p99", rep.zeta_p99}, {"zeta0", rep.zeta0},
                          {"floor", rep.floor},       {"n_pairs", rep.pairs.size()},
                          {"n_skipped", rep.n_skipped}};
        if (!json_out.empty()) {
            auto f = open_output(json_out);
            f << aggregate.dump() << "\n";
            finish_output(f, json_out);
        }

        json config = {{"subcommand", "zeta"},
                       {"gains", gains},
                       {"floor", floor},
                       {"env", env.to_json()}};
        json out = aggregate;
        out["config"] = config;
        std::string anchor = pairs_out;
        if (anchor.empty()) anchor = cdf_out;
        if (anchor.empty()) anchor = json_out;
        emit_summary(out, summary, anchor);
    }
};

// ---------------------------------------------------------------- capacity

struct CapacityCmd {
    std::string links_path, eligibility_path, schedule_out, summary;
    std::vector<std::string> gains_paths;
    std::size_t channels = 1;
    CLI::Option* channels_opt = nullptr;
    std::string power_mode = "uniform";
    double power_mw = 1.0;
    EnvOpts env;
    ThreadOpt threads;

    void attach(CLI::App& app) {
        CLI::App* cmd = app.add_subcommand(
            "capacity", "greedy multi-channel schedule for a link set");
        cmd->add_option("--links", links_path, "links CSV (id,sender,receiver,power_mw)")
            ->required();
        cmd->add_option("--gains", gains_paths,
                        "RSS matrix CSV; repeat for per-channel matrices")
            ->required();
        channels_opt = cmd->add_option(
            "--channels", channels, "channel count (default: number of matrices)");
        cmd->add_option("--eligibility", eligibility_path,
                        "eligibility CSV (link_id,channel); default all-eligible");
        cmd->add_option("--power", power_mode,
                        "power assignment: uniform, linear, or file")
            ->check(CLI::IsMember({"uniform", "linear", "file"}))
            ->capture_default_str();
        cmd->add_option("--power-mw", power_mw,
                        "uniform power, or received power for linear")
            ->capture_default_str();
        cmd->add_option("--schedule-out", schedule_out, "schedule CSV output");
        cmd->add_option("--summary", summary, "summary JSON path");
        env.attach(*cmd);
        threads.attach(*cmd);
        cmd->callback([this] { run(); });
    }

    void run() {
        env.resolve();
        threads.apply();
        sinr::Instance inst;
        {
            auto f = open_input(links_path);
            inst.links = sinr::load_links(f);
        }
        for (const auto& p : gains_paths)
            inst.gains.push_back(load_gain_file(p, env.tx_override()));
        inst.channels = channels_opt->count() ? channels : gains_paths.size();
        if (inst.gains.size() > 1 && inst.gains.size() != inst.channels)
            throw sinr::error("got " + std::to_string(inst.gains.size()) +
                              " matrices for " + std::to_string(inst.channels) +
                              " channels; give one shared matrix or one per channel");
        if (!eligibility_path.empty()) {
            auto f = open_input(eligibility_path);
            inst.eligibility = sinr::load_eligibility(f, inst.channels);
        }
        inst.env = env.environment();
        if (power_mode == "uniform") {
            inst.powers = sinr::PowerAssignment::uniform(power_mw);
        } else if (power_mode == "linear") {
            inst.powers = sinr::PowerAssignment::linear(power_mw);
        } else {
            std::size_t max_id = 0;
            for (const auto& l : inst.links) max_id = std::max(max_id, l.id);
            std::vector<double> values(max_id + 1, 0.0);
            for (const auto& l : inst.links) values[l.id] = l.power_mw;
            inst.powers = sinr::PowerAssignment::explicit_powers(std::move(values));
        }

        const sinr::Schedule sched = sinr::greedy_multichannel(inst);
        if (!schedule_out.empty()) {
            auto f = open_output(schedule_out);
            sinr::write_schedule_csv(f, sched, inst.links);
            finish_output(f, schedule_out);
        }

        json per_channel = json::array();
        for (const auto& s : sched.assignment) per_channel.push_back(s.size());
        json config = {{"subcommand", "capacity"},
                       {"links", links_path},
                       {"gains", gains_paths},
                       {"eligibility", eligibility_path},
                       {"power", power_mode},
                       {"power_mw", power_mw},
                       {"env", env.to_json()}};
        emit_summary({{"config", config},
                      {"n", inst.links.size()},
                      {"k", inst.channels},
                      {"scheduled", sched.scheduled_count()},
                      {"per_channel_sizes", per_channel},
                      {"markov_check", sched.markov_ok},
                      {"feasibility_check", sched.feasibility_ok}},
                     summary, schedule_out);
    }
};

// ------------------------------------------------------------ ratio-harness

struct RatioHarnessCmd {
    std::string csv_out, summary;
    sinr::HarnessParams params;
    EnvOpts env;
    ThreadOpt threads;

    void attach(CLI::App& app) {
        CLI::App* cmd = app.add_subcommand(
            "ratio-harness", "greedy vs exhaustive optimum on random instances");
        cmd->add_option("--trials", params.trials, "number of random instances")
            ->capture_default_str();
        cmd->add_option("--seed", params.seed, "master seed; trial t uses seed+t")
            ->required();
        cmd->add_option("--max-links", params.max_links, "links per instance in [2, this]")
            ->capture_default_str();
        cmd->add_option("--channels", params.channels, "channels per instance")
            ->capture_default_str();
        cmd->add_option("--alpha", params.alpha, "path-loss exponent")
            ->capture_default_str();
        cmd->add_option("--area", params.area_m, "square side length in meters")
            ->capture_default_str();
        cmd->add_option("--power-mw", params.power_mw, "uniform transmit power")
            ->capture_default_str();
        cmd->add_option("--csv-out", csv_out, "per-trial (zeta,ratio) CSV");
        cmd->add_option("--summary", summary, "summary JSON path");
        env.attach(*cmd);
        threads.attach(*cmd);
        cmd->callback([this] { run(); });
    }

    void run() {
        env.resolve();
        threads.apply();
        params.env = env.environment();
        const sinr::HarnessResult res = sinr::approximation_ratio_harness(params);
        if (!csv_out.empty()) {
            auto f = open_output(csv_out);
            sinr::write_ratio_csv(f, res);
            finish_output(f, csv_out);
        }
        json config = {{"subcommand", "ratio-harness"},
                       {"trials", params.trials},
                       {"seed", params.seed},
                       {"max_links", params.max_links},
                       {"channels", params.channels},
                       {"alpha", params.alpha},
                       {"area_m", params.area_m},
                       {"power_mw", params.power_mw},
                       {"env", env.to_json()}};
        emit_summary({{"config", config},
                      {"degenerate", res.degenerate_count},
                      {"ratio_min", res.ratio_min},
                      {"ratio_median", res.ratio_median},
                      {"ratio_max", res.ratio_max}},
                     summary, csv_out);
    }
};

// --------------------------------------------------------------- fit-alpha

struct FitAlphaCmd {
    std::string layout_path, gains, json_out, summary;
    EnvOpts env;

    void attach(CLI::App& app) {
        CLI::App* cmd = app.add_subcommand(
            "fit-alpha", "least-squares path-loss exponent from a layout and matrix");
        cmd->add_option("--layout", layout_path, "layout CSV (id,x,y[,z])")->required();
        cmd->add_option("--gains", gains, "RSS matrix CSV")->required();
        cmd->add_option("--json-out", json_out, "fit JSON file");
        cmd->add_option("--summary", summary, "summary JSON path");
        env.attach(*cmd);
        cmd->callback([this] { run(); });
    }

    void run() {
        env.resolve();
        sinr::NodeLayout layout;
        {
            auto f = open_input(layout_path);
            layout = sinr::load_layout(f);
        }
        const sinr::GainMatrix m = load_gain_file(gains, env.tx_override());
        const sinr::PathLossFit fit = sinr::fit_path_loss(layout, m);

        json result = {{"alpha", fit.alpha},
                       {"stderr", fit.stderr_},
                       {"n_points", fit.n_points}};
        if (!json_out.empty()) {
            auto f = open_output(json_out);
            f << result.dump() << "\n";
            finish_output(f, json_out);
        }
        json config = {{"subcommand", "fit-alpha"},
                       {"layout", layout_path},
                       {"gains", gains},
                       {"env", env.to_json()}};
        json out = result;
        out["config"] = config;
        emit_summary(out, summary, json_out);
    }
};

// -------------------------------------------------------------- median-rss

struct MedianRssCmd {
    std::vector<std::string> gains_paths;
    std::string out, summary;
    EnvOpts env;

    void attach(CLI::App& app) {
        CLI::App* cmd = app.add_subcommand(
            "median-rss", "per-pair median matrix across channel measurements");
        cmd->add_option("--gains", gains_paths, "RSS matrix CSVs, one per channel")
            ->required();
        cmd->add_option("--out", out, "output RSS matrix CSV")->required();
        cmd->add_option("--summary", summary, "summary JSON path");
        env.attach(*cmd);
        cmd->callback([this] { run(); });
    }

    void run() {
        env.resolve();
        std::vector<sinr::GainMatrix> ms;
        for (const auto& p : gains_paths) ms.push_back(load_gain_file(p, env.tx_override()));
        const sinr::GainMatrix med = sinr::median_rss_matrix(ms);
        {
            auto f = open_output(out);
            sinr::write_rss_matrix(f, med, env.tx_power_dbm);
            finish_output(f, out);
        }
        json config = {{"subcommand", "median-rss"},
                       {"gains", gains_paths},
                       {"out", out},
                       {"env", env.to_json()}};
        emit_summary({{"config", config},
                      {"n_matrices", ms.size()},
                      {"n_nodes", med.size()}},
                     summary, out);
    }
};

// -------------------------------------------------------------------- roc

struct RocCmd {
    std::string trials_path, out, summary;
    std::vector<std::string> gains_paths;
    double beta_min = 1e-2, beta_max = 1e4;
    std::size_t beta_points = 200;
    double t_high = sinr::kDefaultPrrHigh, t_low = sinr::kDefaultPrrLow;
    double power_mw = 1.0;
    CLI::Option* power_opt = nullptr;
    EnvOpts env;
    ThreadOpt threads;

    void attach(CLI::App& app) {
        CLI::App* cmd = app.add_subcommand(
            "roc", "threshold sweep of the SINR model against measured PRR");
        cmd->add_option("--trials", trials_path,
                        "trials CSV (sender,receiver,interferer_ids,prr,channel)")
            ->required();
        cmd->add_option("--gains", gains_paths,
                        "RSS matrix CSV; repeat for per-channel matrices")
            ->required();
        cmd->add_option("--beta-min", beta_min, "smallest threshold")
            ->capture_default_str();
        cmd->add_option("--beta-max", beta_max, "largest threshold")
            ->capture_default_str();
        cmd->add_option("--beta-points", beta_points, "grid size")->capture_default_str();
        cmd->add_option("--t-high", t_high, "PRR success threshold")
            ->capture_default_str();
        cmd->add_option("--t-low", t_low, "PRR failure threshold")->capture_default_str();
        power_opt = cmd->add_option(
            "--power-mw", power_mw,
            "transmit power per sender (default: from tx_power_dbm)");
        cmd->add_option("--out", out, "ROC CSV output");
        cmd->add_option("--summary", summary, "summary JSON path");
        env.attach(*cmd);
        threads.attach(*cmd);
        cmd->callback([this] { run(); });
    }

    void run() {
        env.resolve();
        threads.apply();
        const double power =
            power_opt->count() ? power_mw : sinr::dbm_to_mw(env.tx_power_dbm);
        std::vector<sinr::Trial> trials;
        {
            auto f = open_input(trials_path);
            trials = sinr::load_trials(f, power);
        }
        std::vector<sinr::GainMatrix> ms;
        for (const auto& p : gains_paths) ms.push_back(load_gain_file(p, env.tx_override()));

        const std::vector<double> grid = sinr::make_log_grid(beta_points, beta_min, beta_max);
        const std::vector<sinr::RocPoint> points =
            sinr::roc_sweep(trials, ms, env.environment(), grid, t_high, t_low);
        if (!out.empty()) {
            auto f = open_output(out);
            sinr::write_roc_csv(f, points);
            finish_output(f, out);
        }

        json best = nullptr;
        json best_tpr = nullptr, best_fpr = nullptr;
        try {
            const double b = sinr::best_beta(points);
            best = b;
            for (const auto& p : points) {
                if (p.beta == b) {
                    best_tpr = p.tpr;
                    best_fpr = p.fpr;
                    break;
                }
            }
        } catch (const sinr::error&) {
            // all rates undefined (single-class input); reported as null
        }
        json config = {{"subcommand", "roc"},
                       {"trials", trials_path},
                       {"gains", gains_paths},
                       {"beta_min", beta_min},
                       {"beta_max", beta_max},
                       {"beta_points", beta_points},
                       {"t_high", t_high},
                       {"t_low", t_low},
                       {"power_mw", power},
                       {"env", env.to_json()}};
        emit_summary({{"config", config},
                      {"n_trials", trials.size()},
                      {"n_points", points.size()},
                      {"excluded", points.front().excluded},
                      {"best_beta", best},
                      {"best_tpr", best_tpr},
                      {"best_fpr", best_fpr}},
                     summary, out);
    }
};

// -------------------------------------------------------------- additivity

struct AdditivityCmd {
    std::string input, gains, out, summary;
    double power_mw = 1.0;
    CLI::Option* power_opt = nullptr;
    EnvOpts env;

    void attach(CLI::App& app) {
        CLI::App* cmd = app.add_subcommand(
            "additivity", "combined received power from concurrent senders");
        cmd->add_option("--input", input, "CSV with header receiver,sender_ids")
            ->required();
        cmd->add_option("--gains", gains, "RSS matrix CSV")->required();
        power_opt = cmd->add_option(
            "--power-mw", power_mw,
            "transmit power per sender (default: from tx_power_dbm)");
        cmd->add_option("--out", out, "output CSV (receiver,combined_rss_dbm)");
        cmd->add_option("--summary", summary, "summary JSON path");
        env.attach(*cmd);
        cmd->callback([this] { run(); });
    }

    void run() {
        env.resolve();
        const double power =
            power_opt->count() ? power_mw : sinr::dbm_to_mw(env.tx_power_dbm);
        std::vector<sinr::AdditivityRow> rows;
        {
            auto f = open_input(input);
            rows = sinr::load_additivity_rows(f);
        }
        const sinr::GainMatrix m = load_gain_file(gains, env.tx_override());

        std::size_t undefined = 0;
        std::string body = "receiver,combined_rss_dbm\n";
        for (const auto& row : rows) {
            std::vector<sinr::Link> senders;
            for (std::size_t j = 0; j < row.senders.size(); ++j)
                senders.push_back(
                    sinr::Link{j, row.senders[j], row.receiver, power});
            const auto rss = sinr::predicted_combined_rss(senders, row.receiver, m);
            if (!rss) ++undefined;
            body += std::to_string(row.receiver);
            body += ',';
            body += rss ? sinr::text::format(*rss) : "nan";
            body += '\n';
        }
        if (!out.empty()) {
            auto f = open_output(out);
            f << body;
            finish_output(f, out);
        }
        json config = {{"subcommand", "additivity"},
                       {"input", input},
                       {"gains", gains},
                       {"power_mw", power},
                       {"env", env.to_json()}};
        emit_summary({{"config", config},
                      {"n_rows", rows.size()},
                      {"n_undefined", undefined}},
                     summary, out);
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"measurement-based SINR toolkit: metricity, capacity, and "
                 "classifier evaluation over gain matrices"};
    app.require_subcommand(1);

    GenerateCmd generate;
    ZetaCmd zeta;
    CapacityCmd capacity;
    RatioHarnessCmd harness;
    FitAlphaCmd fit_alpha;
    MedianRssCmd median_rss;
    RocCmd roc;
    AdditivityCmd additivity;

    generate.attach(app);
    zeta.attach(app);
    capacity.attach(app);
    harness.attach(app);
    fit_alpha.attach(app);
    median_rss.attach(app);
    roc.attach(app);
    additivity.attach(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
