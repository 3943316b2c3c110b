#pragma once

#include "qmk/rational.hpp"

#include <cstdint>
#include <random>

namespace qmk {

// Samplers take an explicit generator; independent streams are split from a
// root seed so results are reproducible regardless of evaluation order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::mt19937_64 rng_for_stream(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(stream + 1)));
}

// Portable uniform in [0,1); std::uniform_real_distribution is not
// reproducible across standard libraries.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Exact uniform integer in [0, bound) by rejection on raw bits.
inline Int uniform_below(std::mt19937_64& g, const Int& bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
    if (bound == 1) return 0;
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    while (true) {
        Int r = 0;
        unsigned got = 0;
        while (got < bits) {
            unsigned take = std::min(64u, bits - got);
            std::uint64_t w = g();
            if (take < 64) w >>= (64 - take);
            r <<= take;
            r |= w;
            got += take;
        }
        if (r < bound) return r;
    }
}

}  // namespace qmk
