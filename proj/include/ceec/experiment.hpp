#ifndef CEEC_EXPERIMENT_HPP
#define CEEC_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ceec/engine.hpp"

namespace ceec {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A sweep: every protocol x every seed on one base configuration.
struct ExperimentSpec {
    NetworkConfig base;
    std::vector<ProtocolKind> protocols;  // non-empty
    std::vector<std::uint64_t> seeds;     // non-empty
    std::filesystem::path output_dir = "results";
    bool emit_plots = false;
};

// Defaults used when a config file omits a field. protocols defaults to
// all five, seeds to {1}.
ExperimentSpec default_spec();

// Parses the flat `key = value` config format (# starts a comment).
// Omitted keys keep their defaults; bs_x/bs_y follow field_side to
// (M/2, M) unless given explicitly. Unknown keys, malformed values, and
// invariant violations raise ConfigError naming the key.
ExperimentSpec parse_config_text(std::string_view text);

// parse_config_text over a file's contents. Missing/unreadable file
// raises ConfigError.
ExperimentSpec parse_config(const std::filesystem::path& path);

// Serialized per-round CSV. Header:
//   round,alive_total,alive_normal,alive_advance,alive_super,dead_total,ch_count,packets_to_bs,total_residual_j
// Integers bare, joules with 9 decimal places, '.' decimal point.
std::string per_round_csv(const SimulationResult& result);

struct SummaryRow {
    ProtocolKind protocol = ProtocolKind::CEEC;
    std::uint64_t seed = 0;
    int first_death_round = 0;  // max_rounds when censored
    int last_death_round = 0;
    std::int64_t total_packets_to_bs = 0;
};

// Header: protocol,seed,first_death_round,last_death_round,total_packets_to_bs
std::string summary_csv(const std::vector<SummaryRow>& rows);

// Runs all (protocol, seed) pairs (in parallel), writes one per-round CSV
// per run plus summary.csv, and with emit_plots four SVG charts
// (alive/dead/packets/cluster-heads vs round) overlaying all protocols.
// Returns the paths written. Raises IoError when output_dir is unwritable.
std::vector<std::filesystem::path> run_experiment(const ExperimentSpec& spec);

} // namespace ceec

#endif
