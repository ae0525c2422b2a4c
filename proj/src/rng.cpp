#include "rng.hpp"

#include <cmath>
#include <numbers>

namespace ledti {

namespace {
constexpr uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL;
}

uint64_t Rng::mix(uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

uint64_t Rng::next_u64() {
    state_ += GOLDEN;
    return mix(state_);
}

uint64_t Rng::derive(uint64_t base, uint64_t index) {
    return mix(base + (index + 1) * GOLDEN);
}

double Rng::next_gaussian() {
    // u1 in (0, 1] so log() is finite; u2 in [0, 1).
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace ledti
