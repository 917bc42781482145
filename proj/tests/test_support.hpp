#pragma once

#include "splitfactor/natural.hpp"

#include <cstdint>
#include <random>

namespace testsupport {

using splitfactor::Natural;

// Uniform value in [0, 2^bits).
inline Natural random_below_bits(std::mt19937_64& rng, unsigned bits) {
    if (bits == 0) {
        return Natural(0);
    }
    Natural value = 0;
    for (unsigned produced = 0; produced < bits; produced += 64) {
        value <<= 64;
        value |= Natural(rng());
    }
    value &= splitfactor::pow2(bits) - 1;
    return value;
}

inline std::uint64_t random_in(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

}  // namespace testsupport
