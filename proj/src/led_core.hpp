#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace ledti {

// 4x4 nibble matrix, row-major; cells[0][0] is the most significant nibble of
// the 64-bit block value.
struct State {
    std::array<std::array<uint8_t, 4>, 4> cells{};

    static State from_u64(uint64_t v);
    uint64_t to_u64() const;
    bool operator==(const State&) const = default;
};

// 128-bit key split into its two 64-bit subkeys. k1 is the most significant
// half; the subkey used at step boundary s (s = 0 for the initial key
// addition) is k1 when s is even, k2 when s is odd.
struct Key128 {
    uint64_t k1 = 0;
    uint64_t k2 = 0;

    uint64_t subkey_at_boundary(int s) const { return (s % 2 == 0) ? k1 : k2; }
};

inline constexpr int NUM_STEPS = 12;
inline constexpr int ROUNDS_PER_STEP = 4;
inline constexpr int NUM_ROUNDS = NUM_STEPS * ROUNDS_PER_STEP;

// Cipher Sbox (Table-driven; shared with the unprotected serial datapath).
extern const std::array<uint8_t, 16> SBOX;
extern const std::array<uint8_t, 16> SBOX_INV;

uint8_t sbox_lookup(uint8_t x);

// GF(2^4) product, reduction polynomial x^4 + x + 1.
uint8_t gf16_mul(uint8_t a, uint8_t b);

// Serial MDS matrix A (applied four times per column by the hardware) and its
// fourth power M used by the one-shot reference.
extern const std::array<std::array<uint8_t, 4>, 4> MDS_A;
extern const std::array<std::array<uint8_t, 4>, 4> MDS_M;

// Key-size constants folded into column 0 by AddConstants: rows 0/2 use the
// high nibble of the key size in bits (0x80), rows 1/3 the low nibble.
inline constexpr uint8_t KS_HI = 0x8;
inline constexpr uint8_t KS_LO = 0x0;

// 6-bit round constant for round_index in [0, 47]; the LFSR is advanced before
// first use, so round 0 already sees a nonzero value.
uint8_t round_constant(int round_index);
uint8_t rc_advance(uint8_t rc);

// Round operations. add_constant throws on round_index outside [0, 47].
State add_constant(const State& s, int round_index);
State sub_cells(const State& s);
State shift_rows(const State& s);
State mix_columns_serial(const State& s);
State add_round_key(const State& s, uint64_t subkey);

uint64_t encrypt_block(uint64_t plaintext, const Key128& key);

// Reference encryption with a callback after every round (post-MixColumns)
// and every key addition; round_index is -1 for the initial key addition.
// Used by the lockstep oracle tests against the cycle-accurate simulators.
struct RoundEvent {
    int round_index;     // -1 for initial AK, else 0..47
    bool after_add_key;  // true when the state follows a key addition
    State state;
};
uint64_t encrypt_trace(uint64_t plaintext, const Key128& key,
                       const std::function<void(const RoundEvent&)>& on_event);

}  // namespace ledti
