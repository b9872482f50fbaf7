#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "sinr/capacity.hpp"
#include "sinr/core.hpp"
#include "sinr/eval.hpp"
#include "sinr/gain_matrix.hpp"
#include "sinr/metricity.hpp"

// CSV and key=value readers/writers for the CLI. All node references in these
// formats are 0-based indices into the governing gain matrix; writers emit
// the matrix's node ids where labels are called for.
namespace sinr {

/// Layout CSV: header `id,x,y` or `id,x,y,z`, one node per row.
NodeLayout load_layout(std::istream& in);
void write_layout(std::ostream& out, const NodeLayout& layout);

/// Links CSV: header `id,sender,receiver,power_mw`.
std::vector<Link> load_links(std::istream& in);
void write_links(std::ostream& out, std::span<const Link> links);

/// Eligibility CSV: header `link_id,channel`, one eligible pairing per row.
/// Channels are 0-based and must be below `channels`.
std::vector<std::vector<std::size_t>> load_eligibility(std::istream& in,
                                                       std::size_t channels);

/// Trials CSV: header `sender,receiver,interferer_ids,prr,channel` where
/// interferer_ids is `;`-separated sender nodes (empty for none). Every
/// transmitter is assigned `power_mw`.
std::vector<Trial> load_trials(std::istream& in, double power_mw);

/// Additivity CSV: header `receiver,sender_ids` with `;`-separated senders.
struct AdditivityRow {
    std::size_t receiver = 0;
    std::vector<std::size_t> senders;
};
std::vector<AdditivityRow> load_additivity_rows(std::istream& in);

/// key=value environment file; `#` starts a comment. Recognized keys:
/// noise_dbm, beta, tx_power_dbm.
struct EnvConfigFile {
    std::optional<double> noise_dbm;
    std::optional<double> beta;
    std::optional<double> tx_power_dbm;
};
EnvConfigFile load_env_config(std::istream& in);

/// Schedule CSV: `link_id,channel` for every input link, `-` when unscheduled.
void write_schedule_csv(std::ostream& out, const Schedule& schedule,
                        std::span<const Link> links);

/// ROC CSV: `beta,tpr,fpr,tp,fp,tn,fn,excluded`; undefined rates print as nan.
void write_roc_csv(std::ostream& out, std::span<const RocPoint> points);

/// Per-pair CSV `sender,receiver,zeta`, labels taken from the matrix.
void write_zeta_pairs_csv(std::ostream& out, const MetricityReport& report,
                          const GainMatrix& gains);

/// CDF CSV `zeta,cumulative_fraction`; one row per distinct value.
void write_zeta_cdf_csv(std::ostream& out, const MetricityReport& report);

/// Ratio CSV `zeta,ratio`, one row per non-degenerate trial.
void write_ratio_csv(std::ostream& out, const HarnessResult& result);

} // namespace sinr
