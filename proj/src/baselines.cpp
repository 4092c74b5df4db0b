#include "ceec/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ceec {

std::string to_string(ProtocolKind kind) {
    switch (kind) {
    case ProtocolKind::CEEC: return "ceec";
    case ProtocolKind::LEACH: return "leach";
    case ProtocolKind::SEP: return "sep";
    case ProtocolKind::ESEP: return "esep";
    case ProtocolKind::DEEC: return "deec";
    }
    return "?";
}

std::optional<ProtocolKind> protocol_from_string(std::string_view name) {
    if (name == "ceec") return ProtocolKind::CEEC;
    if (name == "leach") return ProtocolKind::LEACH;
    if (name == "sep") return ProtocolKind::SEP;
    if (name == "esep") return ProtocolKind::ESEP;
    if (name == "deec") return ProtocolKind::DEEC;
    return std::nullopt;
}

int epoch_length(double p) {
    // Tolerance keeps 1/p from ceiling up on representation error
    // (1/0.1 can evaluate just above 10).
    return std::max(1, static_cast<int>(std::ceil(1.0 / p - 1e-9)));
}

double leach_threshold(double p, int round, bool node_eligible) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw std::invalid_argument("leach_threshold: p must lie in (0, 1]");
    }
    if (round < 0) {
        throw std::invalid_argument("leach_threshold: negative round");
    }
    if (!node_eligible) {
        return 0.0;
    }
    const int position = round % epoch_length(p);
    const double denom = 1.0 - p * static_cast<double>(position);
    if (denom <= p) {
        return 1.0;  // last epoch slot; all remaining eligible nodes serve
    }
    return std::min(1.0, p / denom);
}

SepProbabilities sep_thresholds(double p, double alpha, double advanced_fraction) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("sep_thresholds: p must lie in (0, 1)");
    }
    if (advanced_fraction < 0.0 || advanced_fraction > 1.0) {
        throw std::invalid_argument("sep_thresholds: advanced fraction out of [0, 1]");
    }
    if (alpha < 0.0) {
        throw std::invalid_argument("sep_thresholds: negative alpha");
    }
    const double denom = 1.0 + alpha * advanced_fraction;
    return {p / denom, p * (1.0 + alpha) / denom};
}

EsepProbabilities esep_thresholds(double p, double alpha,
                                  const std::array<double, 3>& fractions) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("esep_thresholds: p must lie in (0, 1)");
    }
    if (alpha < 0.0) {
        throw std::invalid_argument("esep_thresholds: negative alpha");
    }
    const double sum = fractions[0] + fractions[1] + fractions[2];
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("esep_thresholds: tier fractions must sum to 1");
    }
    const double denom = fractions[0] + fractions[1] * (1.0 + alpha) +
                         fractions[2] * (1.0 + 2.0 * alpha);
    return {p / denom, p * (1.0 + alpha) / denom, p * (1.0 + 2.0 * alpha) / denom};
}

double deec_probability(double p, double node_residual, double network_average) {
    if (!(network_average > 0.0)) {
        throw std::invalid_argument("deec_probability: network average must be positive");
    }
    if (node_residual <= 0.0) {
        return 0.0;
    }
    return std::min(1.0, p * node_residual / network_average);
}

BaselineSelector::BaselineSelector(ProtocolKind kind, const NetworkConfig& config)
    : kind_(kind),
      last_served_round_(static_cast<std::size_t>(config.total_nodes()), -1) {
    const double n = static_cast<double>(config.total_nodes());
    // SEP sees two classes: Normal, and Advance+Super merged as "advanced".
    // The merged class's weight is its mean extra-energy fraction over e0.
    const int advanced_count = config.n2 + config.n3;
    if (advanced_count > 0) {
        const double m = advanced_count / n;
        const double alpha_sep = config.alpha *
            (config.n2 + 2.0 * config.n3) / advanced_count;
        sep_ = sep_thresholds(config.p, alpha_sep, m);
    } else {
        sep_ = {config.p, config.p};
    }
    esep_ = esep_thresholds(config.p, config.alpha,
                            {config.n1 / n, config.n2 / n, config.n3 / n});
}

// Class probability for the tier-weighted protocols; LEACH and DEEC are
// handled inline in select().
double BaselineSelector::node_probability(const NodeState& node) const {
    switch (kind_) {
    case ProtocolKind::SEP:
        return node.tier == Tier::Normal ? sep_.p_normal : sep_.p_advanced;
    case ProtocolKind::ESEP:
        switch (node.tier) {
        case Tier::Normal: return esep_.p_normal;
        case Tier::Advance: return esep_.p_intermediate;
        case Tier::Super: return esep_.p_advanced;
        }
        return esep_.p_normal;
    default:
        throw std::logic_error("node_probability: protocol has no per-tier class");
    }
}

ClusterAssignment BaselineSelector::select(std::span<const NodeState> nodes,
                                           const NetworkConfig& config, int round,
                                           Rng& rng) {
    const auto pos = positions_by_id(nodes);
    ClusterAssignment assignment;
    assignment.round = round;
    assignment.membership.assign(nodes.size(), -1);

    double network_avg = 0.0;
    if (kind_ == ProtocolKind::DEEC) {
        int alive = 0;
        for (std::size_t id = 0; id < nodes.size(); ++id) {
            const NodeState& node = nodes[pos[id]];
            if (node.alive) {
                network_avg += node.residual_energy;
                ++alive;
            }
        }
        if (alive == 0) {
            return assignment;
        }
        network_avg /= alive;
    }

    // One draw per alive node, ascending id, whether or not it is eligible;
    // the stream layout then depends only on the liveness pattern.
    for (std::size_t node_id = 0; node_id < nodes.size(); ++node_id) {
        const NodeState& node = nodes[pos[node_id]];
        if (!node.alive) {
            continue;
        }
        double p_i;
        if (kind_ == ProtocolKind::LEACH) {
            p_i = config.p;
        } else if (kind_ == ProtocolKind::DEEC) {
            p_i = deec_probability(config.p, node.residual_energy, network_avg);
        } else {
            p_i = node_probability(node);
        }

        const double draw = rng.uniform01();
        if (p_i <= 0.0) {
            continue;
        }
        // A node that served sits out until its class epoch restarts. For
        // DEEC the epoch length follows the node's current p_i, so the
        // machinery degenerates to plain LEACH whenever p_i is constant.
        const int epoch_start = round - round % epoch_length(p_i);
        const bool eligible =
            last_served_round_[static_cast<std::size_t>(node.id)] < epoch_start;
        if (draw < leach_threshold(p_i, round, eligible)) {
            assignment.heads.push_back(node.id);
        }
    }

    for (int id : assignment.heads) {
        last_served_round_[static_cast<std::size_t>(id)] = round;
    }

    if (assignment.heads.empty()) {
        return assignment;  // engine falls back to direct-to-BS
    }

    std::vector<bool> is_head(nodes.size(), false);
    for (int id : assignment.heads) {
        is_head[static_cast<std::size_t>(id)] = true;
    }
    for (std::size_t id = 0; id < nodes.size(); ++id) {
        const NodeState& node = nodes[pos[id]];
        if (!node.alive || is_head[id]) {
            continue;
        }
        int best = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (int head_id : assignment.heads) {  // ascending; ties keep lower id
            const double d =
                distance_between(node, nodes[pos[static_cast<std::size_t>(head_id)]]);
            if (d < best_dist) {
                best_dist = d;
                best = head_id;
            }
        }
        assignment.membership[id] = best;
    }
    return assignment;
}

} // namespace ceec
