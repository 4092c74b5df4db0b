#include "ceec/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <sstream>
#include <system_error>

#include "ceec/plot.hpp"

namespace ceec {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_double(std::string_view key, std::string_view value) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError(std::string(key),
                          "invalid number for '" + std::string(key) + "': " + std::string(value));
    }
    return out;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view value) {
    Int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError(std::string(key),
                          "invalid integer for '" + std::string(key) + "': " + std::string(value));
    }
    return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError(std::string(key),
                      "invalid boolean for '" + std::string(key) + "': " + std::string(value));
}

std::vector<std::string_view> split_list(std::string_view value) {
    std::vector<std::string_view> items;
    while (!value.empty()) {
        const auto comma = value.find(',');
        items.push_back(trim(value.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        value.remove_prefix(comma + 1);
    }
    return items;
}

void append_int(std::string& out, std::int64_t v) {
    char buf[24];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    out.append(buf, ptr);
}

// Fixed 9 decimal places, '.' separator regardless of locale.
void append_joules(std::string& out, double v) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 9);
    (void)ec;
    out.append(buf, ptr);
}

} // namespace

ExperimentSpec default_spec() {
    ExperimentSpec spec;
    spec.protocols = {ProtocolKind::CEEC, ProtocolKind::LEACH, ProtocolKind::SEP,
                      ProtocolKind::ESEP, ProtocolKind::DEEC};
    spec.seeds = {spec.base.seed};
    return spec;
}

ExperimentSpec parse_config_text(std::string_view text) {
    ExperimentSpec spec = default_spec();
    bool bs_x_given = false;
    bool bs_y_given = false;
    bool seeds_given = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("syntax", "line " + std::to_string(line_no) +
                                            ": expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("syntax", "line " + std::to_string(line_no) +
                                            ": empty key or value");
        }

        NetworkConfig& base = spec.base;
        if (key == "field_side") base.field_side = parse_double(key, value);
        else if (key == "n1") base.n1 = parse_int<int>(key, value);
        else if (key == "n2") base.n2 = parse_int<int>(key, value);
        else if (key == "n3") base.n3 = parse_int<int>(key, value);
        else if (key == "e0") base.e0 = parse_double(key, value);
        else if (key == "alpha") base.alpha = parse_double(key, value);
        else if (key == "p") base.p = parse_double(key, value);
        else if (key == "bs_x") { base.bs_x = parse_double(key, value); bs_x_given = true; }
        else if (key == "bs_y") { base.bs_y = parse_double(key, value); bs_y_given = true; }
        else if (key == "seed") base.seed = parse_int<std::uint64_t>(key, value);
        else if (key == "max_rounds") base.max_rounds = parse_int<int>(key, value);
        else if (key == "packet_bits") base.radio.packet_bits = parse_int<std::int64_t>(key, value);
        else if (key == "e_elec_tx") base.radio.e_elec_tx = parse_double(key, value);
        else if (key == "e_elec_rx") base.radio.e_elec_rx = parse_double(key, value);
        else if (key == "e_amp") base.radio.e_amp = parse_double(key, value);
        else if (key == "e_da") base.radio.e_da = parse_double(key, value);
        else if (key == "output_dir") spec.output_dir = std::string(value);
        else if (key == "emit_plots") spec.emit_plots = parse_bool(key, value);
        else if (key == "protocols") {
            spec.protocols.clear();
            for (const auto item : split_list(value)) {
                const auto kind = protocol_from_string(item);
                if (!kind) {
                    throw ConfigError("protocols",
                                      "unknown protocol '" + std::string(item) + "'");
                }
                spec.protocols.push_back(*kind);
            }
        } else if (key == "seeds") {
            spec.seeds.clear();
            for (const auto item : split_list(value)) {
                spec.seeds.push_back(parse_int<std::uint64_t>("seeds", item));
            }
            seeds_given = true;
        } else {
            throw ConfigError(std::string(key), "unknown key '" + std::string(key) + "'");
        }
    }

    if (!bs_x_given) spec.base.bs_x = spec.base.field_side / 2.0;
    if (!bs_y_given) spec.base.bs_y = spec.base.field_side;
    if (!seeds_given) spec.seeds = {spec.base.seed};

    spec.base.validate();
    if (spec.protocols.empty()) {
        throw ConfigError("protocols", "protocol list must not be empty");
    }
    if (spec.seeds.empty()) {
        throw ConfigError("seeds", "seed list must not be empty");
    }
    return spec;
}

ExperimentSpec parse_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("config", "cannot open config file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

std::string per_round_csv(const SimulationResult& result) {
    std::string out =
        "round,alive_total,alive_normal,alive_advance,alive_super,"
        "dead_total,ch_count,packets_to_bs,total_residual_j\n";
    for (const RoundMetrics& m : result.per_round) {
        append_int(out, m.round); out.push_back(',');
        append_int(out, m.alive_total); out.push_back(',');
        append_int(out, m.alive_normal); out.push_back(',');
        append_int(out, m.alive_advance); out.push_back(',');
        append_int(out, m.alive_super); out.push_back(',');
        append_int(out, m.dead_total); out.push_back(',');
        append_int(out, m.ch_count); out.push_back(',');
        append_int(out, m.packets_to_bs); out.push_back(',');
        append_joules(out, m.total_residual); out.push_back('\n');
    }
    return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::string out =
        "protocol,seed,first_death_round,last_death_round,total_packets_to_bs\n";
    for (const SummaryRow& row : rows) {
        out += to_string(row.protocol); out.push_back(',');
        append_int(out, static_cast<std::int64_t>(row.seed)); out.push_back(',');
        append_int(out, row.first_death_round); out.push_back(',');
        append_int(out, row.last_death_round); out.push_back(',');
        append_int(out, row.total_packets_to_bs); out.push_back('\n');
    }
    return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    out << content;
    if (!out.good()) {
        throw IoError("write failed: " + path.string());
    }
}

PlotSeries metric_series(const SimulationResult& result, ProtocolKind kind,
                         double (*pick)(const RoundMetrics&)) {
    PlotSeries series;
    series.label = to_string(kind);
    series.points.reserve(result.per_round.size());
    for (const RoundMetrics& m : result.per_round) {
        series.points.emplace_back(static_cast<double>(m.round), pick(m));
    }
    return series;
}

} // namespace

std::vector<std::filesystem::path> run_experiment(const ExperimentSpec& spec) {
    spec.base.validate();
    if (spec.protocols.empty() || spec.seeds.empty()) {
        throw ConfigError(spec.protocols.empty() ? "protocols" : "seeds",
                          "experiment needs at least one protocol and one seed");
    }

    std::error_code ec;
    std::filesystem::create_directories(spec.output_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory: " + spec.output_dir.string() +
                      " (" + ec.message() + ")");
    }

    struct Run {
        ProtocolKind protocol;
        std::uint64_t seed;
        std::future<SimulationResult> future;
        SimulationResult result;
    };
    std::vector<Run> runs;
    for (const ProtocolKind protocol : spec.protocols) {
        for (const std::uint64_t seed : spec.seeds) {
            NetworkConfig config = spec.base;
            config.seed = seed;
            runs.push_back({protocol, seed,
                            std::async(std::launch::async, run_simulation, config, protocol),
                            {}});
        }
    }

    std::vector<std::filesystem::path> written;
    std::vector<SummaryRow> summary;
    for (Run& run : runs) {
        run.result = run.future.get();
        const auto path = spec.output_dir /
            (to_string(run.protocol) + "_seed" + std::to_string(run.seed) + ".csv");
        write_file(path, per_round_csv(run.result));
        written.push_back(path);

        SummaryRow row;
        row.protocol = run.protocol;
        row.seed = run.seed;
        row.first_death_round =
            run.result.first_death_round.value_or(spec.base.max_rounds);
        row.last_death_round =
            run.result.last_death_round.value_or(spec.base.max_rounds);
        row.total_packets_to_bs = run.result.per_round.empty()
                                      ? 0
                                      : run.result.per_round.back().packets_to_bs;
        summary.push_back(row);
    }

    const auto summary_path = spec.output_dir / "summary.csv";
    write_file(summary_path, summary_csv(summary));
    written.push_back(summary_path);

    if (spec.emit_plots) {
        // One line per protocol, drawn from the sweep's first seed.
        struct Chart {
            const char* file;
            const char* title;
            const char* y_label;
            double (*pick)(const RoundMetrics&);
        };
        const Chart charts[] = {
            {"alive_vs_round.svg", "Alive nodes", "alive nodes",
             [](const RoundMetrics& m) { return static_cast<double>(m.alive_total); }},
            {"dead_vs_round.svg", "Dead nodes", "dead nodes",
             [](const RoundMetrics& m) { return static_cast<double>(m.dead_total); }},
            {"packets_vs_round.svg", "Packets delivered to BS", "packets (cumulative)",
             [](const RoundMetrics& m) { return static_cast<double>(m.packets_to_bs); }},
            {"chs_vs_round.svg", "Cluster-heads per round", "cluster-heads",
             [](const RoundMetrics& m) { return static_cast<double>(m.ch_count); }},
        };
        for (const Chart& chart : charts) {
            std::vector<PlotSeries> series;
            for (const ProtocolKind protocol : spec.protocols) {
                for (const Run& run : runs) {
                    if (run.protocol == protocol && run.seed == spec.seeds.front()) {
                        series.push_back(metric_series(run.result, protocol, chart.pick));
                        break;
                    }
                }
            }
            const auto path = spec.output_dir / chart.file;
            write_line_chart(path, chart.title, "round", chart.y_label, series);
            written.push_back(path);
        }
    }
    return written;
}

} // namespace ceec
