#ifndef CEEC_CEEC_HPP
#define CEEC_CEEC_HPP

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ceec/topology.hpp"

namespace ceec {

// One round's cluster structure. `membership[id]` is the cluster-head id
// of node `id`, or -1 when the node is not a member this round (it is a
// head, dead, or transmitting directly in the zero-head fallback).
struct ClusterAssignment {
    int round = 0;
    std::vector<int> heads;       // node ids, ascending
    std::vector<int> membership;  // size N, -1 = no cluster-head
};

// A region holds alive non-head nodes but no head was supplied for it.
class OrphanedRegionError : public std::logic_error {
public:
    explicit OrphanedRegionError(Region region)
        : std::logic_error("region has alive members but no cluster-head"),
          region_(region) {}
    Region region() const { return region_; }

private:
    Region region_;
};

class NetworkDeadError : public std::logic_error {
public:
    NetworkDeadError() : std::logic_error("no alive nodes in the network") {}
};

// ceil() for cluster-head target counts. Guards against values like
// 0.1 * 30 = 3.0000000000000004 rounding up to 4.
inline int ceil_fraction_count(double x) {
    return static_cast<int>(std::ceil(x - 1e-9));
}

// Mean residual energy over alive nodes of the region; nullopt when the
// region has no alive nodes (caller skips cluster-head selection there).
std::optional<double> region_average_energy(std::span<const NodeState> nodes,
                                            Region region);

// Expected cluster-heads: alive nodes of the region whose residual energy
// is >= the region average. Ids ascending.
std::vector<int> expected_cluster_heads(std::span<const NodeState> nodes,
                                        Region region, double avg);

// Cuts the ECH set down to k = max(1, ceil(p * alive_in_region)) heads.
// When |echs| > k, ranks by residual energy descending, then distance to
// BS ascending, then id ascending, and keeps the first k; otherwise all
// ECHs are kept. Returned ids ascending.
std::vector<int> finalize_cluster_heads(const std::vector<int>& echs,
                                        std::span<const NodeState> nodes,
                                        const NetworkConfig& config,
                                        Region region);

// Joins every alive non-head node to the nearest head of its own region
// (Euclidean distance as the RSSI proxy), ties broken by lower head id.
// Throws OrphanedRegionError if some region has alive members but no head.
ClusterAssignment associate_members(std::span<const NodeState> nodes,
                                    const std::vector<int>& heads,
                                    const NetworkConfig& config);

// The full centralized selection for one round: per-region average ->
// ECH filter -> rank-and-cut -> own-region association. Deterministic in
// the node states; consumes no randomness.
// Throws NetworkDeadError when no node is alive.
ClusterAssignment ceec_select(std::span<const NodeState> nodes,
                              const NetworkConfig& config, int round);

} // namespace ceec

#endif
