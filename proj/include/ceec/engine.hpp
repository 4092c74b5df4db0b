#ifndef CEEC_ENGINE_HPP
#define CEEC_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ceec/baselines.hpp"
#include "ceec/ceec.hpp"
#include "ceec/topology.hpp"

namespace ceec {

// End-of-round snapshot; one CSV row.
struct RoundMetrics {
    int round = 0;
    int alive_total = 0;
    int alive_normal = 0;
    int alive_advance = 0;
    int alive_super = 0;
    int dead_total = 0;
    int ch_count = 0;
    std::int64_t packets_to_bs = 0;  // cumulative
    double total_residual = 0.0;     // joules
};

struct SimulationResult {
    std::vector<RoundMetrics> per_round;
    // Audit ledger: energy actually drained from the network per round,
    // accumulated at every charge site. A node that dies mid-round drains
    // exactly its remaining energy. Same length as per_round.
    std::vector<double> drained_per_round;
    std::optional<int> first_death_round;  // nullopt: no death within cap
    std::optional<int> last_death_round;   // nullopt: nodes alive at cap
    ProtocolKind protocol = ProtocolKind::CEEC;
    NetworkConfig config_echo;
};

struct StabilityPeriod {
    int rounds = 0;
    bool death_observed = false;  // false: censored at max_rounds
};

// Rounds until the first node death; max_rounds with the flag cleared
// when nothing died within the cap.
StabilityPeriod stability_period(const SimulationResult& result);

// One network being simulated round by round. Owns the node states, the
// RNG stream (deployment draws first, then election draws), and the
// baseline election state.
class Simulation {
public:
    Simulation(const NetworkConfig& config, ProtocolKind protocol);

    // One protocol round: cluster selection, then energy-accounted data
    // transfer. Members pay tx to their head; heads pay rx per member,
    // aggregation over members+1 signals, and tx to the BS (one packet
    // each). With zero heads every alive node transmits straight to the
    // BS, one packet each. Nodes finish the round they die in; deaths are
    // marked at round end. Throws NetworkDeadError when nothing is alive.
    RoundMetrics run_round(int round);

    int alive_count() const;
    const std::vector<NodeState>& nodes() const { return nodes_; }
    std::int64_t packets_to_bs() const { return packets_; }
    // Energy drained during the most recent round.
    double last_round_drained() const { return last_drained_; }

private:
    NetworkConfig config_;
    ProtocolKind protocol_;
    Rng rng_;
    std::vector<NodeState> nodes_;
    BaselineSelector selector_;
    std::int64_t packets_ = 0;
    double last_drained_ = 0.0;
};

// Runs rounds 1..max_rounds, stopping early once every node is dead.
// Fully deterministic in (config, protocol). Validates the config first.
SimulationResult run_simulation(const NetworkConfig& config, ProtocolKind protocol);

} // namespace ceec

#endif
