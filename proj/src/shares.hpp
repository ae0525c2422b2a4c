#pragma once

#include <cstdint>

namespace ledti {

// Boolean (XOR) sharings of a nibble. All resharing assignments are fixed
// exactly as written so that simulated traces are reproducible bit-for-bit.
struct Share2 {
    uint8_t s0 = 0;
    uint8_t s1 = 0;
    bool operator==(const Share2&) const = default;
};

struct Share3 {
    uint8_t s0 = 0;
    uint8_t s1 = 0;
    uint8_t s2 = 0;
    bool operator==(const Share3&) const = default;
};

inline Share2 split_1to2(uint8_t x, uint8_t m0) {
    return {static_cast<uint8_t>((x ^ m0) & 0xF),
            static_cast<uint8_t>(m0 & 0xF)};
}

inline uint8_t recombine_2to1(const Share2& s) {
    return static_cast<uint8_t>(s.s0 ^ s.s1);
}

inline Share3 expand_2to3(const Share2& s, uint8_t m1) {
    return {static_cast<uint8_t>((s.s0 ^ m1) & 0xF), s.s1,
            static_cast<uint8_t>(m1 & 0xF)};
}

inline Share2 reduce_3to2(const Share3& s) {
    return {static_cast<uint8_t>(s.s0 ^ s.s1), s.s2};
}

inline uint8_t recombine_3to1(const Share3& s) {
    return static_cast<uint8_t>(s.s0 ^ s.s1 ^ s.s2);
}

}  // namespace ledti
