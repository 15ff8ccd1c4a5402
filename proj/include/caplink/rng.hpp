#ifndef CAPLINK_RNG_HPP
#define CAPLINK_RNG_HPP

#include <cstdint>

namespace caplink {

// splitmix64: tiny, platform-independent deterministic generator; reports
// quote seeds, so the stream must not depend on the standard library.
inline uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline long rand_range(uint64_t& state, long lo, long hi) {
    return lo + static_cast<long>(splitmix64(state) % static_cast<uint64_t>(hi - lo + 1));
}

} // namespace caplink

#endif
