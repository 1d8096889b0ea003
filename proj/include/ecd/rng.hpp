#pragma once

// The project-wide deterministic generator: mt19937_64, fixed across builds so
// seeded runs are byte-stable. Uniform variates are built directly from the
// top 53 bits and live in the open interval (2^-54, 1 - 2^-54), keeping
// quantile() away from its domain edges.

#include <cstdint>
#include <random>

namespace ecd {

using RngEngine = std::mt19937_64;

inline double uniform_open(RngEngine& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

}  // namespace ecd
