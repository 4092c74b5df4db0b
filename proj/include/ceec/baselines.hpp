#ifndef CEEC_BASELINES_HPP
#define CEEC_BASELINES_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ceec/ceec.hpp"
#include "ceec/rng.hpp"
#include "ceec/topology.hpp"

namespace ceec {

enum class ProtocolKind { CEEC, LEACH, SEP, ESEP, DEEC };

std::string to_string(ProtocolKind kind);
std::optional<ProtocolKind> protocol_from_string(std::string_view name);

// Rounds per election epoch for probability p: ceil(1/p), at least 1.
int epoch_length(double p);

// Classic LEACH election threshold
//   T(n) = p / (1 - p * (round mod ceil(1/p)))
// for eligible nodes, 0 for nodes that already served this epoch. Result
// clamped to [0, 1]. Accepts p in (0, 1]; p = 1 elects every round.
double leach_threshold(double p, int round, bool node_eligible);

struct SepProbabilities {
    double p_normal = 0.0;
    double p_advanced = 0.0;
};

// SEP weighted election probabilities for a two-class population where a
// fraction m of nodes carries alpha extra energy:
//   p_nrm = p / (1 + alpha*m),   p_adv = p * (1 + alpha) / (1 + alpha*m)
// The population-weighted mean is p.
SepProbabilities sep_thresholds(double p, double alpha, double advanced_fraction);

struct EsepProbabilities {
    double p_normal = 0.0;
    double p_intermediate = 0.0;
    double p_advanced = 0.0;
};

// Three-class extension of the SEP weighting with energy weights
// 1 : (1+alpha) : (1+2*alpha) and the analogous normalization, so the
// population-weighted mean again equals p. `fractions` must sum to 1.
EsepProbabilities esep_thresholds(double p, double alpha,
                                  const std::array<double, 3>& fractions);

// DEEC election probability p_i = p * E_i(r) / avg(r), clamped to [0, 1].
// Zero for nodes with no residual energy. network_average must be > 0.
double deec_probability(double p, double node_residual, double network_average);

// Stochastic cluster-head election for the comparison protocols. All four
// run the same machinery: a per-node probability p_i feeds the LEACH
// threshold, one Bernoulli draw per alive node in ascending id order, and
// a node that serves sits out until its class epoch restarts. Members join
// the nearest head network-wide (no region restriction). Zero elected
// heads leaves `heads` empty; the engine then has every alive node
// transmit directly to the BS.
//
// Holds the served-this-epoch state, so one selector instance must live
// for the whole simulation.
class BaselineSelector {
public:
    BaselineSelector(ProtocolKind kind, const NetworkConfig& config);

    ClusterAssignment select(std::span<const NodeState> nodes,
                             const NetworkConfig& config, int round, Rng& rng);

private:
    double node_probability(const NodeState& node) const;

    ProtocolKind kind_;
    SepProbabilities sep_;
    EsepProbabilities esep_;
    std::vector<int> last_served_round_;
};

} // namespace ceec

#endif
