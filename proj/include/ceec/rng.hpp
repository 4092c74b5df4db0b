#ifndef CEEC_RNG_HPP
#define CEEC_RNG_HPP

#include <cstdint>
#include <random>

namespace ceec {

// Seeded PRNG with a fully specified output sequence (mt19937_64), so the
// same seed reproduces the same simulation on every platform and compiler.
// Uniform doubles are derived by explicit bit manipulation instead of
// std::uniform_real_distribution, whose algorithm is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + uniform01() * (hi - lo);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace ceec

#endif
