#pragma once

// Inverse-transform sampling and empirical cross-checks of the analytic
// system distributions and st verdicts. The generator (mt19937_64 with
// 53-bit open-interval uniforms, see rng.hpp) is part of the contract:
// identical seeds give identical batches, byte for byte.

#include <cstdint>

#include "ecd/ordering.hpp"

namespace ecd {

struct SampleBatch {
    std::vector<double> draws;
    std::uint64_t seed;
};

// n draws of quantile(p, U) with U uniform on the open unit interval.
SampleBatch sample_component(const ECDParams& p, std::size_t n, std::uint64_t seed);

// n draws of the system lifetime: per draw, one uniform per component (taken
// in component order), then the min (series) or max (parallel).
SampleBatch sample_system(const SystemSpec& s, std::size_t n, std::uint64_t seed);

// Empirical st comparison with per-point binomial three-sigma bands. A
// direction is asserted only from points whose bands separate; points with
// overlapping bands are inconclusive, never violations. System b draws use
// seed + 1. Conflicting separated points give Neither with point witnesses;
// no separated points at all gives the degenerate-equal verdict.
OrderingVerdict empirical_st_check(const SystemSpec& a, const SystemSpec& b, const Grid& g,
                                   std::size_t n, std::uint64_t seed);

}  // namespace ecd
