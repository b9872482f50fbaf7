#include "sinr/csv_io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "sinr/error.hpp"
#include "sinr/text.hpp"

namespace sinr {
namespace {

struct LineReader {
    std::istream& in;
    std::string line{};
    std::size_t lineno = 0;

    bool next() {
        while (std::getline(in, line)) {
            ++lineno;
            if (!text::trim(line).empty()) return true;
        }
        return false;
    }

    std::string where() const { return "line " + std::to_string(lineno); }
};

void expect_header(LineReader& r, const std::vector<std::string>& expected,
                   const std::string& what) {
    if (!r.next()) throw error(what + ": empty file");
    const auto cells = text::split(r.line, ',');
    bool ok = cells.size() == expected.size();
    for (std::size_t i = 0; ok && i < cells.size(); ++i)
        ok = text::trim(cells[i]) == expected[i];
    if (!ok) {
        std::string want;
        for (std::size_t i = 0; i < expected.size(); ++i)
            want += (i ? "," : "") + expected[i];
        throw error(what + ", " + r.where() + ": expected header '" + want + "', got '" +
                    text::trim(r.line) + "'");
    }
}

std::size_t parse_index(const std::string& s, const std::string& where) {
    const long long v = text::parse_int(s, where);
    if (v < 0) throw error(where + ": negative index " + std::to_string(v));
    return static_cast<std::size_t>(v);
}

std::vector<std::size_t> parse_index_list(const std::string& s, const std::string& where) {
    std::vector<std::size_t> out;
    if (text::trim(s).empty()) return out;
    for (const std::string& tok : text::split(s, ';')) out.push_back(parse_index(tok, where));
    return out;
}

} // namespace

NodeLayout load_layout(std::istream& in) {
    LineReader r{in};
    if (!r.next()) throw error("layout: empty file");
    const auto header = text::split(r.line, ',');
    bool has_z = false;
    if (header.size() == 4 && text::trim(header[3]) == "z")
        has_z = true;
    else if (header.size() != 3)
        throw error("layout, " + r.where() + ": expected header 'id,x,y' or 'id,x,y,z'");
    if (text::trim(header[0]) != "id" || text::trim(header[1]) != "x" ||
        text::trim(header[2]) != "y")
        throw error("layout, " + r.where() + ": expected header 'id,x,y' or 'id,x,y,z'");

    NodeLayout layout;
    while (r.next()) {
        const auto cells = text::split(r.line, ',');
        if (cells.size() != header.size())
            throw error("layout, " + r.where() + ": expected " +
                        std::to_string(header.size()) + " cells, got " +
                        std::to_string(cells.size()));
        NodeLayout::Point p;
        p.x = text::parse_double(cells[1], "layout, " + r.where() + ", column x");
        p.y = text::parse_double(cells[2], "layout, " + r.where() + ", column y");
        if (has_z) p.z = text::parse_double(cells[3], "layout, " + r.where() + ", column z");
        layout.ids.push_back(text::trim(cells[0]));
        layout.positions.push_back(p);
    }
    if (layout.positions.empty()) throw error("layout: no nodes");
    return layout;
}

void write_layout(std::ostream& out, const NodeLayout& layout) {
    bool has_z = false;
    for (const auto& p : layout.positions)
        if (p.z != 0.0) has_z = true;
    out << (has_z ? "id,x,y,z\n" : "id,x,y\n");
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const auto& p = layout.positions[i];
        out << layout.ids[i] << ',' << text::format(p.x) << ',' << text::format(p.y);
        if (has_z) out << ',' << text::format(p.z);
        out << '\n';
    }
}

std::vector<Link> load_links(std::istream& in) {
    LineReader r{in};
    expect_header(r, {"id", "sender", "receiver", "power_mw"}, "links");
    std::vector<Link> links;
    while (r.next()) {
        const auto cells = text::split(r.line, ',');
        if (cells.size() != 4)
            throw error("links, " + r.where() + ": expected 4 cells, got " +
                        std::to_string(cells.size()));
        Link l;
        l.id = parse_index(cells[0], "links, " + r.where() + ", column id");
        l.sender = parse_index(cells[1], "links, " + r.where() + ", column sender");
        l.receiver = parse_index(cells[2], "links, " + r.where() + ", column receiver");
        l.power_mw = text::parse_double(cells[3], "links, " + r.where() + ", column power_mw");
        links.push_back(l);
    }
    if (links.empty()) throw error("links: no rows");
    return links;
}

void write_links(std::ostream& out, std::span<const Link> links) {
    out << "id,sender,receiver,power_mw\n";
    for (const Link& l : links)
        out << l.id << ',' << l.sender << ',' << l.receiver << ','
            << text::format(l.power_mw) << '\n';
}

std::vector<std::vector<std::size_t>> load_eligibility(std::istream& in,
                                                       std::size_t channels) {
    LineReader r{in};
    expect_header(r, {"link_id", "channel"}, "eligibility");
    std::vector<std::vector<std::size_t>> elig(channels);
    while (r.next()) {
        const auto cells = text::split(r.line, ',');
        if (cells.size() != 2)
            throw error("eligibility, " + r.where() + ": expected 2 cells, got " +
                        std::to_string(cells.size()));
        const std::size_t id = parse_index(cells[0], "eligibility, " + r.where());
        const std::size_t c = parse_index(cells[1], "eligibility, " + r.where());
        if (c >= channels)
            throw error("eligibility, " + r.where() + ": channel " + std::to_string(c) +
                        " is outside the configured " + std::to_string(channels) +
                        " channels");
        elig[c].push_back(id);
    }
    return elig;
}

std::vector<Trial> load_trials(std::istream& in, double power_mw) {
    LineReader r{in};
    expect_header(r, {"sender", "receiver", "interferer_ids", "prr", "channel"}, "trials");
    std::vector<Trial> trials;
    while (r.next()) {
        const auto cells = text::split(r.line, ',');
        if (cells.size() != 5)
            throw error("trials, " + r.where() + ": expected 5 cells, got " +
                        std::to_string(cells.size()));
        Trial t;
        t.link.id = trials.size();
        t.link.sender = parse_index(cells[0], "trials, " + r.where() + ", column sender");
        t.link.receiver =
            parse_index(cells[1], "trials, " + r.where() + ", column receiver");
        t.link.power_mw = power_mw;
        const auto senders =
            parse_index_list(cells[2], "trials, " + r.where() + ", column interferer_ids");
        for (std::size_t j = 0; j < senders.size(); ++j) {
            if (senders[j] == t.link.sender)
                throw error("trials, " + r.where() +
                            ": sender listed as its own interferer");
            t.interferers.push_back(Link{1000000 + j, senders[j], t.link.receiver, power_mw});
        }
        t.prr = text::parse_double(cells[3], "trials, " + r.where() + ", column prr");
        if (!(t.prr >= 0.0 && t.prr <= 1.0))
            throw error("trials, " + r.where() + ": prr must be in [0,1]");
        t.channel = parse_index(cells[4], "trials, " + r.where() + ", column channel");
        trials.push_back(std::move(t));
    }
    if (trials.empty()) throw error("trials: no rows");
    return trials;
}

std::vector<AdditivityRow> load_additivity_rows(std::istream& in) {
    LineReader r{in};
    expect_header(r, {"receiver", "sender_ids"}, "additivity");
    std::vector<AdditivityRow> rows;
    while (r.next()) {
        const auto cells = text::split(r.line, ',');
        if (cells.size() != 2)
            throw error("additivity, " + r.where() + ": expected 2 cells, got " +
                        std::to_string(cells.size()));
        AdditivityRow row;
        row.receiver = parse_index(cells[0], "additivity, " + r.where());
        row.senders =
            parse_index_list(cells[1], "additivity, " + r.where() + ", column sender_ids");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw error("additivity: no rows");
    return rows;
}

EnvConfigFile load_env_config(std::istream& in) {
    LineReader r{in};
    EnvConfigFile cfg;
    while (r.next()) {
        std::string body = r.line;
        if (const auto hash = body.find('#'); hash != std::string::npos)
            body = body.substr(0, hash);
        if (text::trim(body).empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw error("env config, " + r.where() + ": expected key=value");
        const std::string key = text::trim(body.substr(0, eq));
        const double value =
            text::parse_double(body.substr(eq + 1), "env config, " + r.where());
        if (key == "noise_dbm")
            cfg.noise_dbm = value;
        else if (key == "beta")
            cfg.beta = value;
        else if (key == "tx_power_dbm")
            cfg.tx_power_dbm = value;
        else
            throw error("env config, " + r.where() + ": unknown key '" + key + "'");
    }
    return cfg;
}

void write_schedule_csv(std::ostream& out, const Schedule& schedule,
                        std::span<const Link> links) {
    std::map<std::size_t, std::size_t> channel_of;
    for (std::size_t c = 0; c < schedule.assignment.size(); ++c)
        for (std::size_t id : schedule.assignment[c]) channel_of.emplace(id, c);
    out << "link_id,channel\n";
    for (const Link& l : links) {
        const auto it = channel_of.find(l.id);
        out << l.id << ',';
        if (it == channel_of.end())
            out << '-';
        else
            out << it->second;
        out << '\n';
    }
}

void write_roc_csv(std::ostream& out, std::span<const RocPoint> points) {
    out << "beta,tpr,fpr,tp,fp,tn,fn,excluded\n";
    for (const RocPoint& p : points)
        out << text::format(p.beta) << ',' << text::format(p.tpr) << ','
            << text::format(p.fpr) << ',' << p.tp << ',' << p.fp << ',' << p.tn << ','
            << p.fn << ',' << p.excluded << '\n';
}

void write_zeta_pairs_csv(std::ostream& out, const MetricityReport& report,
                          const GainMatrix& gains) {
    out << "sender,receiver,zeta\n";
    for (const PairZeta& pz : report.pairs)
        out << gains.node_ids()[pz.sender] << ',' << gains.node_ids()[pz.receiver] << ','
            << text::format(pz.zeta) << '\n';
}

void write_zeta_cdf_csv(std::ostream& out, const MetricityReport& report) {
    out << "zeta,cumulative_fraction\n";
    const auto& zs = report.sorted_zetas;
    const double m = static_cast<double>(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (i + 1 < zs.size() && zs[i + 1] == zs[i]) continue;
        out << text::format(zs[i]) << ','
            << text::format(static_cast<double>(i + 1) / m) << '\n';
    }
}

void write_ratio_csv(std::ostream& out, const HarnessResult& result) {
    out << "zeta,ratio\n";
    for (const HarnessTrial& t : result.trials) {
        if (t.degenerate) continue;
        out << text::format(t.zeta_max) << ',' << text::format(t.ratio) << '\n';
    }
}

} // namespace sinr
