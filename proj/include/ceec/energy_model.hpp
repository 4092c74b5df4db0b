#ifndef CEEC_ENERGY_MODEL_HPP
#define CEEC_ENERGY_MODEL_HPP

#include <cstdint>

namespace ceec {

// First-order radio model constants. Defaults are the usual 50 nJ/bit
// electronics, 100 pJ/bit/m2 amplifier, 50 pJ/bit/signal aggregation,
// 200-bit data packets.
struct RadioParams {
    double e_elec_tx = 50e-9;    // transmitter electronics, J/bit
    double e_elec_rx = 50e-9;    // receiver electronics, J/bit
    double e_amp = 100e-12;      // transmit amplifier, J/bit/m^2
    double e_da = 50e-12;        // data aggregation, J/bit/signal
    std::int64_t packet_bits = 200;
};

// Energy to transmit `bits` over `distance_m` meters:
//   bits * e_elec_tx + bits * e_amp * distance_m^2
// Single-exponent (d^2) path loss for all distances; the model has one
// amplifier constant, so there is no multipath regime.
// Throws std::invalid_argument on negative bits or distance.
double tx_energy(const RadioParams& params, std::int64_t bits, double distance_m);

// Energy to receive `bits`: bits * e_elec_rx.
double rx_energy(const RadioParams& params, std::int64_t bits);

// Energy for a cluster-head to aggregate `signals` incoming signals of
// `bits` each: signals * bits * e_da. The head's own reading counts as
// one signal.
double aggregation_energy(const RadioParams& params, std::int64_t bits,
                          std::int64_t signals);

} // namespace ceec

#endif
