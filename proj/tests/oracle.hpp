#ifndef CEEC_TESTS_ORACLE_HPP
#define CEEC_TESTS_ORACLE_HPP

// Reference implementation of one round of centralized selection, written
// independently of the library path: ranking by repeated best-candidate
// extraction instead of sorting, membership by scanning every head. Used
// to cross-check ceec_select on small networks.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ceec/topology.hpp"

namespace ceec::testing {

struct OracleAssignment {
    std::vector<int> heads;       // ascending
    std::vector<int> membership;  // by id, -1 = none
};

inline OracleAssignment oracle_select(const std::vector<NodeState>& nodes,
                                      const NetworkConfig& config) {
    const auto pos = positions_by_id(nodes);
    const auto node_of = [&](int id) -> const NodeState& {
        return nodes[pos[static_cast<std::size_t>(id)]];
    };

    OracleAssignment out;
    out.membership.assign(nodes.size(), -1);

    for (const Region region : {Region::LER, Region::MER, Region::HER}) {
        std::vector<int> alive_ids;
        for (std::size_t id = 0; id < nodes.size(); ++id) {
            const NodeState& node = node_of(static_cast<int>(id));
            if (node.alive && node.region == region) {
                alive_ids.push_back(static_cast<int>(id));
            }
        }
        if (alive_ids.empty()) {
            continue;
        }

        double avg = 0.0;
        double lo = node_of(alive_ids.front()).residual_energy;
        double hi = lo;
        for (const int id : alive_ids) {
            const double residual = node_of(id).residual_energy;
            avg += residual;
            lo = std::min(lo, residual);
            hi = std::max(hi, residual);
        }
        avg /= static_cast<double>(alive_ids.size());
        avg = std::clamp(avg, lo, hi);  // keep the mean inside its envelope

        std::vector<int> candidates;
        for (const int id : alive_ids) {
            if (node_of(id).residual_energy >= avg) {
                candidates.push_back(id);
            }
        }

        int want = static_cast<int>(
            std::ceil(config.p * static_cast<double>(alive_ids.size()) - 1e-9));
        if (want < 1) {
            want = 1;
        }
        if (static_cast<int>(candidates.size()) <= want) {
            for (const int id : candidates) {
                out.heads.push_back(id);
            }
            continue;
        }
        // extract the best candidate `want` times
        for (int round = 0; round < want; ++round) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < candidates.size(); ++i) {
                const NodeState& a = node_of(candidates[i]);
                const NodeState& b = node_of(candidates[best]);
                bool better = false;
                if (a.residual_energy > b.residual_energy) {
                    better = true;
                } else if (a.residual_energy == b.residual_energy) {
                    const double da = distance_to_bs(a, config);
                    const double db = distance_to_bs(b, config);
                    if (da < db) {
                        better = true;
                    } else if (da == db && candidates[i] < candidates[best]) {
                        better = true;
                    }
                }
                if (better) {
                    best = i;
                }
            }
            out.heads.push_back(candidates[best]);
            candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
        }
    }
    std::sort(out.heads.begin(), out.heads.end());

    for (std::size_t id = 0; id < nodes.size(); ++id) {
        const NodeState& node = node_of(static_cast<int>(id));
        if (!node.alive) {
            continue;
        }
        bool is_head = false;
        for (const int head : out.heads) {
            if (head == static_cast<int>(id)) {
                is_head = true;
            }
        }
        if (is_head) {
            continue;
        }
        int best = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (const int head : out.heads) {
            const NodeState& h = node_of(head);
            if (h.region != node.region) {
                continue;
            }
            const double d = std::hypot(node.x - h.x, node.y - h.y);
            if (d < best_dist || (d == best_dist && head < best)) {
                best_dist = d;
                best = head;
            }
        }
        out.membership[id] = best;  // -1 when the region has no head
    }
    return out;
}

// Random small network for oracle cross-checks: nodes anywhere in the
// field, region derived from y, tier from the region, a dash of dead
// nodes and deliberate residual ties. At least one node stays alive.
inline std::vector<NodeState> random_small_network(Rng& rng, const NetworkConfig& config,
                                                   int max_nodes = 12) {
    const int n = 1 + static_cast<int>(rng.uniform01() * max_nodes) % max_nodes;
    std::vector<NodeState> nodes;
    for (int id = 0; id < n; ++id) {
        NodeState node;
        node.id = id;
        node.x = rng.uniform(0.0, config.field_side);
        node.y = rng.uniform(0.0, config.field_side);
        node.region = region_of(node.y, config.field_side);
        node.tier = home_tier(node.region);
        double residual = rng.uniform(0.01, 1.5);
        if (rng.uniform01() < 0.3) {
            residual = std::round(residual * 10.0) / 10.0;  // force ties
            if (residual <= 0.0) {
                residual = 0.1;
            }
        }
        node.initial_energy = 1.5;
        node.residual_energy = residual;
        node.alive = true;
        if (id > 0 && rng.uniform01() < 0.15) {
            node.residual_energy = 0.0;
            node.alive = false;
        }
        nodes.push_back(node);
    }
    return nodes;
}

} // namespace ceec::testing

#endif
