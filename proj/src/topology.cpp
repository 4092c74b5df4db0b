#include "ceec/topology.hpp"

#include <cmath>

namespace ceec {

void NetworkConfig::validate() const {
    if (!(field_side > 0.0)) {
        throw ConfigError("field_side", "field_side must be positive");
    }
    if (n1 < 0) throw ConfigError("n1", "n1 must be >= 0");
    if (n2 < 0) throw ConfigError("n2", "n2 must be >= 0");
    if (n3 < 0) throw ConfigError("n3", "n3 must be >= 0");
    if (total_nodes() < 1) {
        throw ConfigError("n1", "total node count n1+n2+n3 must be >= 1");
    }
    if (!(e0 > 0.0)) throw ConfigError("e0", "e0 must be positive");
    if (!(alpha >= 0.0)) throw ConfigError("alpha", "alpha must be >= 0");
    if (!(p > 0.0 && p < 1.0)) {
        throw ConfigError("p", "p must lie strictly between 0 and 1");
    }
    if (!(radio.e_elec_tx > 0.0)) {
        throw ConfigError("e_elec_tx", "e_elec_tx must be positive");
    }
    if (!(radio.e_elec_rx > 0.0)) {
        throw ConfigError("e_elec_rx", "e_elec_rx must be positive");
    }
    if (!(radio.e_amp > 0.0)) throw ConfigError("e_amp", "e_amp must be positive");
    if (!(radio.e_da > 0.0)) throw ConfigError("e_da", "e_da must be positive");
    if (radio.packet_bits <= 0) {
        throw ConfigError("packet_bits", "packet_bits must be positive");
    }
    if (max_rounds < 0) {
        throw ConfigError("max_rounds", "max_rounds must be >= 0");
    }
    if (!std::isfinite(bs_x)) throw ConfigError("bs_x", "bs_x must be finite");
    if (!std::isfinite(bs_y)) throw ConfigError("bs_y", "bs_y must be finite");
}

RegionBounds region_bounds(Region region, double field_side) {
    const double third = field_side / 3.0;
    switch (region) {
    case Region::LER: return {2.0 * third, field_side};
    case Region::MER: return {third, 2.0 * third};
    case Region::HER: return {0.0, third};
    }
    return {};
}

Region region_of(double y, double field_side) {
    const double third = field_side / 3.0;
    if (y >= 2.0 * third) return Region::LER;
    if (y >= third) return Region::MER;
    return Region::HER;
}

Region home_region(Tier tier) {
    switch (tier) {
    case Tier::Normal: return Region::LER;
    case Tier::Advance: return Region::MER;
    case Tier::Super: return Region::HER;
    }
    return Region::LER;
}

Tier home_tier(Region region) {
    switch (region) {
    case Region::LER: return Tier::Normal;
    case Region::MER: return Tier::Advance;
    case Region::HER: return Tier::Super;
    }
    return Tier::Normal;
}

double tier_initial_energy(Tier tier, double e0, double alpha) {
    switch (tier) {
    case Tier::Normal: return e0;
    case Tier::Advance: return e0 * (1.0 + alpha);
    case Tier::Super: return e0 * (1.0 + 2.0 * alpha);
    }
    return e0;
}

std::vector<NodeState> deploy(const NetworkConfig& config, Rng& rng) {
    if (config.total_nodes() < 1) {
        throw std::invalid_argument("deploy: zero total nodes");
    }
    std::vector<NodeState> nodes;
    nodes.reserve(static_cast<std::size_t>(config.total_nodes()));

    const Tier tiers[] = {Tier::Normal, Tier::Advance, Tier::Super};
    const int counts[] = {config.n1, config.n2, config.n3};
    int id = 0;
    for (int t = 0; t < 3; ++t) {
        const Region region = home_region(tiers[t]);
        const RegionBounds bounds = region_bounds(region, config.field_side);
        const double energy = tier_initial_energy(tiers[t], config.e0, config.alpha);
        for (int c = 0; c < counts[t]; ++c) {
            NodeState node;
            node.id = id++;
            node.x = rng.uniform(0.0, config.field_side);
            node.y = rng.uniform(bounds.y_low, bounds.y_high);
            node.tier = tiers[t];
            node.region = region;
            node.initial_energy = energy;
            node.residual_energy = energy;
            node.alive = true;
            nodes.push_back(node);
        }
    }
    return nodes;
}

double total_energy(std::span<const NodeState> nodes) {
    double sum = 0.0;
    for (const NodeState& node : nodes) {
        sum += node.initial_energy;
    }
    return sum;
}

double distance_to_bs(const NodeState& node, const NetworkConfig& config) {
    return std::hypot(node.x - config.bs_x, node.y - config.bs_y);
}

double distance_between(const NodeState& a, const NodeState& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

std::vector<std::size_t> positions_by_id(std::span<const NodeState> nodes) {
    std::vector<std::size_t> pos(nodes.size(), nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const int id = nodes[i].id;
        if (id < 0 || static_cast<std::size_t>(id) >= nodes.size() ||
            pos[static_cast<std::size_t>(id)] != nodes.size()) {
            throw std::invalid_argument("node ids must be unique and form 0..N-1");
        }
        pos[static_cast<std::size_t>(id)] = i;
    }
    return pos;
}

} // namespace ceec
