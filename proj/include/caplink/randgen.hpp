#ifndef CAPLINK_RANDGEN_HPP
#define CAPLINK_RANDGEN_HPP

#include "caplink/linking.hpp"
#include "caplink/slice.hpp"

#include <cstdint>

namespace caplink {

struct GeneratedInstance {
    CoorientedBase base;
    OrientedLine line;
    uint64_t seed = 0;
    int attempts = 0;
};

// Deterministic random instance: a pencil with small integer coefficients,
// resampled until the slice certifies (no common factor, every Jacobian
// nonzero) and the random line is certified disjoint from the base.
GeneratedInstance gen_random(uint64_t seed, int deg_lo, int deg_hi, int max_attempts = 256);

// Same, filtered down to bases consisting of a single real point.
GeneratedInstance gen_random_single_point(uint64_t seed, int max_attempts = 512);

} // namespace caplink

#endif
