#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace parageo {

// Deterministic helpers on top of mt19937_64. Everything randomized in this
// library takes an explicit seed; nothing reads the wall clock.

inline double urand(std::mt19937_64& gen) {
    // 53 uniform bits in [0,1); identical on every platform.
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * urand(gen);
}

inline double normal(std::mt19937_64& gen) {
    // Box-Muller; avoids implementation-defined std::normal_distribution.
    double u1 = 0.0;
    do {
        u1 = urand(gen);
    } while (u1 == 0.0);
    const double u2 = urand(gen);
    const double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

inline int uniform_int(std::mt19937_64& gen, int lo, int hi) {
    // inclusive range; fine for test-scale spans
    return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace parageo
