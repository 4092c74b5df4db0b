#ifndef CEEC_TOPOLOGY_HPP
#define CEEC_TOPOLOGY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ceec/energy_model.hpp"
#include "ceec/rng.hpp"

namespace ceec {

// Node energy classes, lowest to highest initial energy.
enum class Tier { Normal, Advance, Super };

// Horizontal strips of the field. LER is the strip nearest the base
// station (top edge), HER the farthest. Each strip hosts one tier:
// Normal<->LER, Advance<->MER, Super<->HER.
enum class Region { LER, MER, HER };

enum class Role { ClusterHead, Member, Unassigned };

struct NodeState {
    int id = 0;
    double x = 0.0;                // meters
    double y = 0.0;
    Tier tier = Tier::Normal;
    Region region = Region::LER;
    double initial_energy = 0.0;   // joules
    double residual_energy = 0.0;
    bool alive = true;
    Role role = Role::Unassigned;  // per round
    std::optional<int> ch_id;      // cluster-head this round, if any
};

// Raised by config validation; `key` names the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error(what), key_(std::move(key)) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

struct NetworkConfig {
    double field_side = 100.0;     // M in the M x M field
    int n1 = 34;                   // normal nodes
    int n2 = 33;                   // advance nodes
    int n3 = 33;                   // super nodes
    double e0 = 0.5;               // base energy, joules
    double alpha = 1.0;            // heterogeneity factor
    double p = 0.1;                // desired cluster-head fraction
    double bs_x = 50.0;            // base station position
    double bs_y = 100.0;
    RadioParams radio;
    std::uint64_t seed = 1;
    int max_rounds = 10000;

    int total_nodes() const { return n1 + n2 + n3; }

    // Throws ConfigError naming the first violated field.
    void validate() const;
};

struct RegionBounds {
    double y_low = 0.0;
    double y_high = 0.0;
};

// The field splits into three equal strips. With the BS at the top edge,
// LER is the top third [2M/3, M], MER the middle [M/3, 2M/3), HER the
// bottom [0, M/3).
RegionBounds region_bounds(Region region, double field_side);

// Strip containing a given y coordinate.
Region region_of(double y, double field_side);

// Fixed tier<->region pairing.
Region home_region(Tier tier);
Tier home_tier(Region region);

// Normal -> e0, Advance -> e0*(1+alpha), Super -> e0*(1+2*alpha).
double tier_initial_energy(Tier tier, double e0, double alpha);

// Places n1 Normal nodes uniformly in LER, n2 Advance in MER, n3 Super in
// HER, ids 0..N-1 in that order. Per node, x is drawn before y. Placement
// is a pure function of (config, rng seed).
// Throws std::invalid_argument when the config has zero total nodes.
std::vector<NodeState> deploy(const NetworkConfig& config, Rng& rng);

// Sum of initial energies. At deployment this equals
// n1*e0 + n2*e0*(1+alpha) + n3*e0*(1+2*alpha).
double total_energy(std::span<const NodeState> nodes);

// Euclidean distance from the node to the base station.
double distance_to_bs(const NodeState& node, const NetworkConfig& config);

double distance_between(const NodeState& a, const NodeState& b);

// List positions indexed by node id. Ids must form 0..N-1 (deploy
// guarantees this); the list itself may be in any order. Lets every
// selection routine iterate in id order, so results never depend on
// list order.
std::vector<std::size_t> positions_by_id(std::span<const NodeState> nodes);

} // namespace ceec

#endif
