#include "sbox_ti.hpp"

namespace ledti {
namespace {

constexpr uint8_t G1_TABLE[256] = {
    0x7, 0x7, 0x7, 0x7, 0x7, 0x7, 0x7, 0x7, 0x7, 0x7, 0x7, 0x7, 0x7, 0x7, 0x7, 0x7,
    0xE, 0xE, 0xC, 0xC, 0xC, 0xC, 0xE, 0xE, 0xE, 0xE, 0xC, 0xC, 0xC, 0xC, 0xE, 0xE,
    0x9, 0xB, 0x9, 0xB, 0x8, 0xA, 0x8, 0xA, 0x8, 0xA, 0x8, 0xA, 0x9, 0xB, 0x9, 0xB,
    0x2, 0x0, 0x0, 0x2, 0x1, 0x3, 0x3, 0x1, 0x3, 0x1, 0x1, 0x3, 0x0, 0x2, 0x2, 0x0,
    0xB, 0x9, 0xA, 0x8, 0xB, 0x9, 0xA, 0x8, 0xA, 0x8, 0xB, 0x9, 0xA, 0x8, 0xB, 0x9,
    0x0, 0x2, 0x3, 0x1, 0x2, 0x0, 0x1, 0x3, 0x1, 0x3, 0x2, 0x0, 0x3, 0x1, 0x0, 0x2,
    0x4, 0x4, 0x5, 0x5, 0x5, 0x5, 0x4, 0x4, 0x4, 0x4, 0x5, 0x5, 0x5, 0x5, 0x4, 0x4,
    0xD, 0xD, 0xE, 0xE, 0xE, 0xE, 0xD, 0xD, 0xD, 0xD, 0xE, 0xE, 0xE, 0xE, 0xD, 0xD,
    0x5, 0x5, 0x4, 0x4, 0x4, 0x4, 0x5, 0x5, 0x5, 0x5, 0x4, 0x4, 0x4, 0x4, 0x5, 0x5,
    0xC, 0xC, 0xF, 0xF, 0xF, 0xF, 0xC, 0xC, 0xC, 0xC, 0xF, 0xF, 0xF, 0xF, 0xC, 0xC,
    0xA, 0x8, 0xB, 0x9, 0xA, 0x8, 0xB, 0x9, 0xB, 0x9, 0xA, 0x8, 0xB, 0x9, 0xA, 0x8,
    0x1, 0x3, 0x2, 0x0, 0x3, 0x1, 0x0, 0x2, 0x0, 0x2, 0x3, 0x1, 0x2, 0x0, 0x1, 0x3,
    0x8, 0xA, 0x8, 0xA, 0x9, 0xB, 0x9, 0xB, 0x9, 0xB, 0x9, 0xB, 0x8, 0xA, 0x8, 0xA,
    0x3, 0x1, 0x1, 0x3, 0x0, 0x2, 0x2, 0x0, 0x2, 0x0, 0x0, 0x2, 0x1, 0x3, 0x3, 0x1,
    0x6, 0x6, 0x6, 0x6, 0x6, 0x6, 0x6, 0x6, 0x6, 0x6, 0x6, 0x6, 0x6, 0x6, 0x6, 0x6,
    0xF, 0xF, 0xD, 0xD, 0xD, 0xD, 0xF, 0xF, 0xF, 0xF, 0xD, 0xD, 0xD, 0xD, 0xF, 0xF,
};

constexpr uint8_t G2_TABLE[256] = {
    0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0,
    0x9, 0x9, 0xB, 0xB, 0xB, 0xB, 0x9, 0x9, 0x9, 0x9, 0xB, 0xB, 0xB, 0xB, 0x9, 0x9,
    0xE, 0xC, 0xE, 0xC, 0xF, 0xD, 0xF, 0xD, 0xF, 0xD, 0xF, 0xD, 0xE, 0xC, 0xE, 0xC,
    0x5, 0x7, 0x7, 0x5, 0x6, 0x4, 0x4, 0x6, 0x4, 0x6, 0x6, 0x4, 0x7, 0x5, 0x5, 0x7,
    0xC, 0xE, 0xD, 0xF, 0xC, 0xE, 0xD, 0xF, 0xD, 0xF, 0xC, 0xE, 0xD, 0xF, 0xC, 0xE,
    0x7, 0x5, 0x4, 0x6, 0x5, 0x7, 0x6, 0x4, 0x6, 0x4, 0x5, 0x7, 0x4, 0x6, 0x7, 0x5,
    0x3, 0x3, 0x2, 0x2, 0x2, 0x2, 0x3, 0x3, 0x3, 0x3, 0x2, 0x2, 0x2, 0x2, 0x3, 0x3,
    0xA, 0xA, 0x9, 0x9, 0x9, 0x9, 0xA, 0xA, 0xA, 0xA, 0x9, 0x9, 0x9, 0x9, 0xA, 0xA,
    0x2, 0x2, 0x3, 0x3, 0x3, 0x3, 0x2, 0x2, 0x2, 0x2, 0x3, 0x3, 0x3, 0x3, 0x2, 0x2,
    0xB, 0xB, 0x8, 0x8, 0x8, 0x8, 0xB, 0xB, 0xB, 0xB, 0x8, 0x8, 0x8, 0x8, 0xB, 0xB,
    0xD, 0xF, 0xC, 0xE, 0xD, 0xF, 0xC, 0xE, 0xC, 0xE, 0xD, 0xF, 0xC, 0xE, 0xD, 0xF,
    0x6, 0x4, 0x5, 0x7, 0x4, 0x6, 0x7, 0x5, 0x7, 0x5, 0x4, 0x6, 0x5, 0x7, 0x6, 0x4,
    0xF, 0xD, 0xF, 0xD, 0xE, 0xC, 0xE, 0xC, 0xE, 0xC, 0xE, 0xC, 0xF, 0xD, 0xF, 0xD,
    0x4, 0x6, 0x6, 0x4, 0x7, 0x5, 0x5, 0x7, 0x5, 0x7, 0x7, 0x5, 0x6, 0x4, 0x4, 0x6,
    0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1,
    0x8, 0x8, 0xA, 0xA, 0xA, 0xA, 0x8, 0x8, 0x8, 0x8, 0xA, 0xA, 0xA, 0xA, 0x8, 0x8,
};

constexpr uint8_t G3_TABLE[256] = {
    0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0,
    0x9, 0x9, 0xB, 0xB, 0xB, 0xB, 0x9, 0x9, 0x9, 0x9, 0xB, 0xB, 0xB, 0xB, 0x9, 0x9,
    0xE, 0xC, 0xE, 0xC, 0xF, 0xD, 0xF, 0xD, 0xF, 0xD, 0xF, 0xD, 0xE, 0xC, 0xE, 0xC,
    0x5, 0x7, 0x7, 0x5, 0x6, 0x4, 0x4, 0x6, 0x4, 0x6, 0x6, 0x4, 0x7, 0x5, 0x5, 0x7,
    0xC, 0xE, 0xD, 0xF, 0xC, 0xE, 0xD, 0xF, 0xD, 0xF, 0xC, 0xE, 0xD, 0xF, 0xC, 0xE,
    0x7, 0x5, 0x4, 0x6, 0x5, 0x7, 0x6, 0x4, 0x6, 0x4, 0x5, 0x7, 0x4, 0x6, 0x7, 0x5,
    0x3, 0x3, 0x2, 0x2, 0x2, 0x2, 0x3, 0x3, 0x3, 0x3, 0x2, 0x2, 0x2, 0x2, 0x3, 0x3,
    0xA, 0xA, 0x9, 0x9, 0x9, 0x9, 0xA, 0xA, 0xA, 0xA, 0x9, 0x9, 0x9, 0x9, 0xA, 0xA,
    0x2, 0x2, 0x3, 0x3, 0x3, 0x3, 0x2, 0x2, 0x2, 0x2, 0x3, 0x3, 0x3, 0x3, 0x2, 0x2,
    0xB, 0xB, 0x8, 0x8, 0x8, 0x8, 0xB, 0xB, 0xB, 0xB, 0x8, 0x8, 0x8, 0x8, 0xB, 0xB,
    0xD, 0xF, 0xC, 0xE, 0xD, 0xF, 0xC, 0xE, 0xC, 0xE, 0xD, 0xF, 0xC, 0xE, 0xD, 0xF,
    0x6, 0x4, 0x5, 0x7, 0x4, 0x6, 0x7, 0x5, 0x7, 0x5, 0x4, 0x6, 0x5, 0x7, 0x6, 0x4,
    0xF, 0xD, 0xF, 0xD, 0xE, 0xC, 0xE, 0xC, 0xE, 0xC, 0xE, 0xC, 0xF, 0xD, 0xF, 0xD,
    0x4, 0x6, 0x6, 0x4, 0x7, 0x5, 0x5, 0x7, 0x5, 0x7, 0x7, 0x5, 0x6, 0x4, 0x4, 0x6,
    0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1, 0x1,
    0x8, 0x8, 0xA, 0xA, 0xA, 0xA, 0x8, 0x8, 0x8, 0x8, 0xA, 0xA, 0xA, 0xA, 0x8, 0x8,
};

constexpr uint8_t F1_TABLE[256] = {
    0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0,
    0x8, 0x8, 0xC, 0xC, 0x9, 0x9, 0xD, 0xD, 0x2, 0x2, 0x6, 0x6, 0x3, 0x3, 0x7, 0x7,
    0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF,
    0x7, 0x3, 0x3, 0x7, 0x6, 0x2, 0x2, 0x6, 0xD, 0x9, 0x9, 0xD, 0xC, 0x8, 0x8, 0xC,
    0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB,
    0x3, 0x2, 0x7, 0x6, 0x2, 0x3, 0x6, 0x7, 0x9, 0x8, 0xD, 0xC, 0x8, 0x9, 0xC, 0xD,
    0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4,
    0xC, 0x9, 0x8, 0xD, 0xD, 0x8, 0x9, 0xC, 0x6, 0x3, 0x2, 0x7, 0x7, 0x2, 0x3, 0x6,
    0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE,
    0x6, 0xC, 0x2, 0x8, 0x7, 0xD, 0x3, 0x9, 0xC, 0x6, 0x8, 0x2, 0xD, 0x7, 0x9, 0x3,
    0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1,
    0x9, 0x7, 0xD, 0x3, 0x8, 0x6, 0xC, 0x2, 0x3, 0xD, 0x7, 0x9, 0x2, 0xC, 0x6, 0x8,
    0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5,
    0xD, 0x6, 0x9, 0x2, 0xC, 0x7, 0x8, 0x3, 0x7, 0xC, 0x3, 0x8, 0x6, 0xD, 0x2, 0x9,
    0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA,
    0x2, 0xD, 0x6, 0x9, 0x3, 0xC, 0x7, 0x8, 0x8, 0x7, 0xC, 0x3, 0x9, 0x6, 0xD, 0x2,
};

constexpr uint8_t F2_TABLE[256] = {
    0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0,
    0x8, 0x8, 0xC, 0xC, 0x9, 0x9, 0xD, 0xD, 0x2, 0x2, 0x6, 0x6, 0x3, 0x3, 0x7, 0x7,
    0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF,
    0x7, 0x3, 0x3, 0x7, 0x6, 0x2, 0x2, 0x6, 0xD, 0x9, 0x9, 0xD, 0xC, 0x8, 0x8, 0xC,
    0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB,
    0x3, 0x2, 0x7, 0x6, 0x2, 0x3, 0x6, 0x7, 0x9, 0x8, 0xD, 0xC, 0x8, 0x9, 0xC, 0xD,
    0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4,
    0xC, 0x9, 0x8, 0xD, 0xD, 0x8, 0x9, 0xC, 0x6, 0x3, 0x2, 0x7, 0x7, 0x2, 0x3, 0x6,
    0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE,
    0x6, 0xC, 0x2, 0x8, 0x7, 0xD, 0x3, 0x9, 0xC, 0x6, 0x8, 0x2, 0xD, 0x7, 0x9, 0x3,
    0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1,
    0x9, 0x7, 0xD, 0x3, 0x8, 0x6, 0xC, 0x2, 0x3, 0xD, 0x7, 0x9, 0x2, 0xC, 0x6, 0x8,
    0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5,
    0xD, 0x6, 0x9, 0x2, 0xC, 0x7, 0x8, 0x3, 0x7, 0xC, 0x3, 0x8, 0x6, 0xD, 0x2, 0x9,
    0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA,
    0x2, 0xD, 0x6, 0x9, 0x3, 0xC, 0x7, 0x8, 0x8, 0x7, 0xC, 0x3, 0x9, 0x6, 0xD, 0x2,
};

constexpr uint8_t F3_TABLE[256] = {
    0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0,
    0x8, 0x8, 0xC, 0xC, 0x9, 0x9, 0xD, 0xD, 0x2, 0x2, 0x6, 0x6, 0x3, 0x3, 0x7, 0x7,
    0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF, 0xB, 0xF,
    0x7, 0x3, 0x3, 0x7, 0x6, 0x2, 0x2, 0x6, 0xD, 0x9, 0x9, 0xD, 0xC, 0x8, 0x8, 0xC,
    0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB, 0xA, 0xB,
    0x3, 0x2, 0x7, 0x6, 0x2, 0x3, 0x6, 0x7, 0x9, 0x8, 0xD, 0xC, 0x8, 0x9, 0xC, 0xD,
    0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4, 0x1, 0x4,
    0xC, 0x9, 0x8, 0xD, 0xD, 0x8, 0x9, 0xC, 0x6, 0x3, 0x2, 0x7, 0x7, 0x2, 0x3, 0x6,
    0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE, 0x4, 0xE,
    0x6, 0xC, 0x2, 0x8, 0x7, 0xD, 0x3, 0x9, 0xC, 0x6, 0x8, 0x2, 0xD, 0x7, 0x9, 0x3,
    0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1, 0xF, 0x1,
    0x9, 0x7, 0xD, 0x3, 0x8, 0x6, 0xC, 0x2, 0x3, 0xD, 0x7, 0x9, 0x2, 0xC, 0x6, 0x8,
    0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5, 0xE, 0x5,
    0xD, 0x6, 0x9, 0x2, 0xC, 0x7, 0x8, 0x3, 0x7, 0xC, 0x3, 0x8, 0x6, 0xD, 0x2, 0x9,
    0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA, 0x5, 0xA,
    0x2, 0xD, 0x6, 0x9, 0x3, 0xC, 0x7, 0x8, 0x8, 0x7, 0xC, 0x3, 0x9, 0x6, 0xD, 0x2,
};

}  // namespace

const SboxDecomposition& builtin_decomposition() {
    static const SboxDecomposition d = [] {
        SboxDecomposition t;

        std::copy(std::begin(G1_TABLE), std::end(G1_TABLE), t.g[0].begin());
        std::copy(std::begin(G2_TABLE), std::end(G2_TABLE), t.g[1].begin());
        std::copy(std::begin(G3_TABLE), std::end(G3_TABLE), t.g[2].begin());
        std::copy(std::begin(F1_TABLE), std::end(F1_TABLE), t.f[0].begin());
        std::copy(std::begin(F2_TABLE), std::end(F2_TABLE), t.f[1].begin());
        std::copy(std::begin(F3_TABLE), std::end(F3_TABLE), t.f[2].begin());
        return t;
    }();
    return d;
}

}  // namespace ledti
