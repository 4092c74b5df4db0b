#include "ceec/engine.hpp"

#include <stdexcept>
#include <vector>

#include "ceec/energy_model.hpp"

namespace ceec {

StabilityPeriod stability_period(const SimulationResult& result) {
    if (result.first_death_round) {
        return {*result.first_death_round, true};
    }
    return {result.config_echo.max_rounds, false};
}

Simulation::Simulation(const NetworkConfig& config, ProtocolKind protocol)
    : config_(config),
      protocol_(protocol),
      rng_(config.seed),
      nodes_(deploy(config, rng_)),
      selector_(protocol, config) {}

int Simulation::alive_count() const {
    int count = 0;
    for (const NodeState& node : nodes_) {
        if (node.alive) {
            ++count;
        }
    }
    return count;
}

RoundMetrics Simulation::run_round(int round) {
    if (alive_count() == 0) {
        throw NetworkDeadError();
    }

    // NST: cluster formation. Control traffic is modeled as free for every
    // protocol, so selection costs nothing.
    const ClusterAssignment assignment =
        protocol_ == ProtocolKind::CEEC
            ? ceec_select(nodes_, config_, round)
            : selector_.select(nodes_, config_, round, rng_);

    std::vector<bool> is_head(nodes_.size(), false);
    for (int id : assignment.heads) {
        is_head[static_cast<std::size_t>(id)] = true;
    }
    for (NodeState& node : nodes_) {
        if (!node.alive) {
            continue;
        }
        const std::size_t i = static_cast<std::size_t>(node.id);
        if (is_head[i]) {
            node.role = Role::ClusterHead;
            node.ch_id = node.id;
        } else if (assignment.membership[i] >= 0) {
            node.role = Role::Member;
            node.ch_id = assignment.membership[i];
        } else {
            node.role = Role::Unassigned;  // direct-to-BS fallback
            node.ch_id.reset();
        }
    }

    // NTT: every charge goes through the ledger so the round's drain can be
    // audited against the drop in total residual energy.
    double drained = 0.0;
    const auto charge = [&](NodeState& node, double joules) {
        node.residual_energy -= joules;
        drained += joules;
    };
    const std::int64_t bits = config_.radio.packet_bits;

    if (!assignment.heads.empty()) {
        std::vector<int> member_count(nodes_.size(), 0);
        for (NodeState& node : nodes_) {
            if (!node.alive) {
                continue;
            }
            const int head_id = assignment.membership[static_cast<std::size_t>(node.id)];
            if (head_id < 0) {
                continue;
            }
            NodeState& head = nodes_[static_cast<std::size_t>(head_id)];
            charge(node, tx_energy(config_.radio, bits, distance_between(node, head)));
            charge(head, rx_energy(config_.radio, bits));
            ++member_count[static_cast<std::size_t>(head_id)];
        }
        for (int head_id : assignment.heads) {
            NodeState& head = nodes_[static_cast<std::size_t>(head_id)];
            const std::int64_t signals = member_count[static_cast<std::size_t>(head_id)] + 1;
            charge(head, aggregation_energy(config_.radio, bits, signals));
            charge(head, tx_energy(config_.radio, bits, distance_to_bs(head, config_)));
            ++packets_;  // one aggregated packet per head per round
        }
    } else {
        // Zero heads elected: every alive node sends its packet straight
        // to the base station.
        for (NodeState& node : nodes_) {
            if (!node.alive) {
                continue;
            }
            charge(node, tx_energy(config_.radio, bits, distance_to_bs(node, config_)));
            ++packets_;
        }
    }

    // Nodes finish the round they die in; deaths are marked now. A dying
    // node drains only what it had, so the overdraft leaves the ledger.
    for (NodeState& node : nodes_) {
        if (node.alive && node.residual_energy <= 0.0) {
            drained += node.residual_energy;  // residual is <= 0 here
            node.residual_energy = 0.0;
            node.alive = false;
            node.role = Role::Unassigned;
            node.ch_id.reset();
        }
    }
    last_drained_ = drained;

    RoundMetrics metrics;
    metrics.round = round;
    for (const NodeState& node : nodes_) {
        if (node.alive) {
            ++metrics.alive_total;
            switch (node.tier) {
            case Tier::Normal: ++metrics.alive_normal; break;
            case Tier::Advance: ++metrics.alive_advance; break;
            case Tier::Super: ++metrics.alive_super; break;
            }
        } else {
            ++metrics.dead_total;
        }
        metrics.total_residual += node.residual_energy;
    }
    metrics.ch_count = static_cast<int>(assignment.heads.size());
    metrics.packets_to_bs = packets_;
    return metrics;
}

SimulationResult run_simulation(const NetworkConfig& config, ProtocolKind protocol) {
    config.validate();

    SimulationResult result;
    result.protocol = protocol;
    result.config_echo = config;

    Simulation sim(config, protocol);
    result.per_round.reserve(static_cast<std::size_t>(config.max_rounds));
    for (int round = 1; round <= config.max_rounds; ++round) {
        if (sim.alive_count() == 0) {
            break;
        }
        const RoundMetrics metrics = sim.run_round(round);
        result.per_round.push_back(metrics);
        result.drained_per_round.push_back(sim.last_round_drained());
        if (!result.first_death_round && metrics.dead_total > 0) {
            result.first_death_round = round;
        }
        if (!result.last_death_round && metrics.alive_total == 0) {
            result.last_death_round = round;
        }
    }
    return result;
}

} // namespace ceec
