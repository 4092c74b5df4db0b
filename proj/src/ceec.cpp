#include "ceec/ceec.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>

namespace ceec {

std::optional<double> region_average_energy(std::span<const NodeState> nodes,
                                            Region region) {
    const auto pos = positions_by_id(nodes);
    double sum = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
    for (std::size_t id = 0; id < nodes.size(); ++id) {
        const NodeState& node = nodes[pos[id]];
        if (node.alive && node.region == region) {
            sum += node.residual_energy;
            lo = count == 0 ? node.residual_energy : std::min(lo, node.residual_energy);
            hi = count == 0 ? node.residual_energy : std::max(hi, node.residual_energy);
            ++count;
        }
    }
    if (count == 0) {
        return std::nullopt;
    }
    // The exact mean lies within [min, max]; the floating sum can land just
    // outside (e.g. equal residuals rounding up), which would empty the
    // E_i >= avg candidate set. Clamp it back.
    return std::clamp(sum / count, lo, hi);
}

std::vector<int> expected_cluster_heads(std::span<const NodeState> nodes,
                                        Region region, double avg) {
    const auto pos = positions_by_id(nodes);
    std::vector<int> echs;
    for (std::size_t id = 0; id < nodes.size(); ++id) {
        const NodeState& node = nodes[pos[id]];
        if (node.alive && node.region == region && node.residual_energy >= avg) {
            echs.push_back(node.id);
        }
    }
    return echs;
}

std::vector<int> finalize_cluster_heads(const std::vector<int>& echs,
                                        std::span<const NodeState> nodes,
                                        const NetworkConfig& config,
                                        Region region) {
    const auto pos = positions_by_id(nodes);
    int alive_in_region = 0;
    for (const NodeState& node : nodes) {
        if (node.alive && node.region == region) {
            ++alive_in_region;
        }
    }
    if (alive_in_region == 0) {
        return {};
    }
    // The region's maximum-energy node always satisfies E_i >= avg, so a
    // populated region cannot produce an empty ECH set.
    assert(!echs.empty());

    const int target = std::max(1, ceil_fraction_count(config.p * alive_in_region));
    std::vector<int> heads = echs;
    if (static_cast<int>(heads.size()) > target) {
        std::sort(heads.begin(), heads.end(), [&](int a, int b) {
            const NodeState& na = nodes[pos[static_cast<std::size_t>(a)]];
            const NodeState& nb = nodes[pos[static_cast<std::size_t>(b)]];
            if (na.residual_energy != nb.residual_energy) {
                return na.residual_energy > nb.residual_energy;
            }
            const double da = distance_to_bs(na, config);
            const double db = distance_to_bs(nb, config);
            if (da != db) {
                return da < db;
            }
            return a < b;
        });
        heads.resize(static_cast<std::size_t>(target));
    }
    std::sort(heads.begin(), heads.end());
    return heads;
}

ClusterAssignment associate_members(std::span<const NodeState> nodes,
                                    const std::vector<int>& heads,
                                    [[maybe_unused]] const NetworkConfig& config) {
    const auto pos = positions_by_id(nodes);
    ClusterAssignment assignment;
    assignment.heads = heads;
    std::sort(assignment.heads.begin(), assignment.heads.end());
    assignment.membership.assign(nodes.size(), -1);

    std::array<std::vector<int>, 3> heads_by_region;
    std::vector<bool> is_head(nodes.size(), false);
    for (int id : assignment.heads) {
        const NodeState& head = nodes[pos[static_cast<std::size_t>(id)]];
        heads_by_region[static_cast<std::size_t>(head.region)].push_back(id);
        is_head[static_cast<std::size_t>(id)] = true;
    }

    for (std::size_t id = 0; id < nodes.size(); ++id) {
        const NodeState& node = nodes[pos[id]];
        if (!node.alive || is_head[id]) {
            continue;
        }
        const auto& candidates = heads_by_region[static_cast<std::size_t>(node.region)];
        if (candidates.empty()) {
            throw OrphanedRegionError(node.region);
        }
        int best = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (int head_id : candidates) {  // ascending, so ties keep the lower id
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

ClusterAssignment ceec_select(std::span<const NodeState> nodes,
                              const NetworkConfig& config, int round) {
    bool any_alive = false;
    for (const NodeState& node : nodes) {
        if (node.alive) {
            any_alive = true;
            break;
        }
    }
    if (!any_alive) {
        throw NetworkDeadError();
    }

    std::vector<int> heads;
    for (Region region : {Region::LER, Region::MER, Region::HER}) {
        const auto avg = region_average_energy(nodes, region);
        if (!avg) {
            continue;  // extinct region
        }
        const auto echs = expected_cluster_heads(nodes, region, *avg);
        const auto selected = finalize_cluster_heads(echs, nodes, config, region);
        heads.insert(heads.end(), selected.begin(), selected.end());
    }

    ClusterAssignment assignment = associate_members(nodes, heads, config);
    assignment.round = round;
    return assignment;
}

} // namespace ceec
