#include "ceec/energy_model.hpp"

#include <stdexcept>

namespace ceec {

double tx_energy(const RadioParams& params, std::int64_t bits, double distance_m) {
    if (bits < 0) {
        throw std::invalid_argument("tx_energy: negative bit count");
    }
    if (distance_m < 0.0) {
        throw std::invalid_argument("tx_energy: negative distance");
    }
    const double b = static_cast<double>(bits);
    return b * params.e_elec_tx + b * params.e_amp * distance_m * distance_m;
}

double rx_energy(const RadioParams& params, std::int64_t bits) {
    if (bits < 0) {
        throw std::invalid_argument("rx_energy: negative bit count");
    }
    return static_cast<double>(bits) * params.e_elec_rx;
}

double aggregation_energy(const RadioParams& params, std::int64_t bits,
                          std::int64_t signals) {
    if (bits < 0) {
        throw std::invalid_argument("aggregation_energy: negative bit count");
    }
    if (signals < 0) {
        throw std::invalid_argument("aggregation_energy: negative signal count");
    }
    return static_cast<double>(signals) * static_cast<double>(bits) * params.e_da;
}

} // namespace ceec
