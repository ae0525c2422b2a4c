#pragma once

#include <cstdint>

namespace ledti {

// SplitMix64. Chosen for trivial cross-language portability: the whole
// generator is three xor-shift-multiply lines, and the output stream for a
// given seed is documented in the README so ports can be checked bit-for-bit.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64();

    // Uniform nibble / word helpers (low bits of next_u64).
    uint8_t next_nibble() { return static_cast<uint8_t>(next_u64() & 0xF); }
    bool next_coin() { return (next_u64() & 1) != 0; }

    // Standard normal via Box-Muller (cosine branch only; the sine value is
    // discarded so each gaussian consumes exactly two raw draws).
    double next_gaussian();

    // Stateless finalizer: the SplitMix64 output mix applied to x.
    static uint64_t mix(uint64_t x);

    // Deterministic substream derivation: derive(base, i) seeds stream i.
    static uint64_t derive(uint64_t base, uint64_t index);

private:
    uint64_t state_;
};

}  // namespace ledti
