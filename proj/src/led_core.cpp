#include "led_core.hpp"

#include "errors.hpp"

namespace ledti {

const std::array<uint8_t, 16> SBOX = {0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD,
                                      0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2};

const std::array<uint8_t, 16> SBOX_INV = [] {
    std::array<uint8_t, 16> inv{};
    for (int x = 0; x < 16; ++x) inv[SBOX[static_cast<size_t>(x)]] =
        static_cast<uint8_t>(x);
    return inv;
}();

// Hardware matrix A; the full MixColumnsSerial matrix is M = A^4.
const std::array<std::array<uint8_t, 4>, 4> MDS_A = {{
    {0, 1, 0, 0},
    {0, 0, 1, 0},
    {0, 0, 0, 1},
    {4, 1, 2, 2},
}};

namespace {

std::array<std::array<uint8_t, 4>, 4> mat_mul(
    const std::array<std::array<uint8_t, 4>, 4>& x,
    const std::array<std::array<uint8_t, 4>, 4>& y) {
    std::array<std::array<uint8_t, 4>, 4> out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            uint8_t acc = 0;
            for (int k = 0; k < 4; ++k)
                acc ^= gf16_mul(x[static_cast<size_t>(r)][static_cast<size_t>(k)],
                                y[static_cast<size_t>(k)][static_cast<size_t>(c)]);
            out[static_cast<size_t>(r)][static_cast<size_t>(c)] = acc;
        }
    return out;
}

// 48-entry round-constant table, generated once from the LFSR.
const std::array<uint8_t, 48> RC_TABLE = [] {
    std::array<uint8_t, 48> t{};
    uint8_t rc = 0;
    for (int i = 0; i < 48; ++i) {
        rc = rc_advance(rc);
        t[static_cast<size_t>(i)] = rc;
    }
    return t;
}();

// Key-size constants for the 128-bit variant (0x80): high nibble into rows
// 0 and 2, low nibble into rows 1 and 3 of column 0.
}  // namespace

const std::array<std::array<uint8_t, 4>, 4> MDS_M = [] {
    auto a2 = mat_mul(MDS_A, MDS_A);
    return mat_mul(a2, a2);
}();

State State::from_u64(uint64_t v) {
    State s;
    for (int i = 0; i < 16; ++i) {
        s.cells[static_cast<size_t>(i / 4)][static_cast<size_t>(i % 4)] =
            static_cast<uint8_t>((v >> (60 - 4 * i)) & 0xF);
    }
    return s;
}

uint64_t State::to_u64() const {
    uint64_t v = 0;
    for (int i = 0; i < 16; ++i)
        v = (v << 4) |
            cells[static_cast<size_t>(i / 4)][static_cast<size_t>(i % 4)];
    return v;
}

uint8_t sbox_lookup(uint8_t x) { return SBOX[x & 0xF]; }

uint8_t gf16_mul(uint8_t a, uint8_t b) {
    uint8_t r = 0;
    a &= 0xF;
    b &= 0xF;
    while (b) {
        if (b & 1) r ^= a;
        a = static_cast<uint8_t>(a << 1);
        if (a & 0x10) a ^= 0x13;  // reduce by x^4 + x + 1
        b >>= 1;
    }
    return r & 0xF;
}

uint8_t rc_advance(uint8_t rc) {
    uint8_t fb = static_cast<uint8_t>(((rc >> 5) ^ (rc >> 4) ^ 1) & 1);
    return static_cast<uint8_t>(((rc << 1) | fb) & 0x3F);
}

uint8_t round_constant(int round_index) {
    if (round_index < 0 || round_index >= NUM_ROUNDS)
        throw argument_error("round_index: out of range [0,47]: " +
                             std::to_string(round_index));
    return RC_TABLE[static_cast<size_t>(round_index)];
}

State add_constant(const State& s, int round_index) {
    uint8_t rc = round_constant(round_index);
    State out = s;
    const uint8_t col0[4] = {static_cast<uint8_t>(0 ^ KS_HI),
                             static_cast<uint8_t>(1 ^ KS_LO),
                             static_cast<uint8_t>(2 ^ KS_HI),
                             static_cast<uint8_t>(3 ^ KS_LO)};
    uint8_t hi3 = static_cast<uint8_t>((rc >> 3) & 7);
    uint8_t lo3 = static_cast<uint8_t>(rc & 7);
    const uint8_t col1[4] = {hi3, lo3, hi3, lo3};
    for (size_t r = 0; r < 4; ++r) {
        out.cells[r][0] ^= col0[r];
        out.cells[r][1] ^= col1[r];
    }
    return out;
}

State sub_cells(const State& s) {
    State out;
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c)
            out.cells[r][c] = SBOX[s.cells[r][c]];
    return out;
}

State shift_rows(const State& s) {
    State out;
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c)
            out.cells[r][c] = s.cells[r][(c + r) % 4];
    return out;
}

State mix_columns_serial(const State& s) {
    State out;
    for (size_t c = 0; c < 4; ++c)
        for (size_t r = 0; r < 4; ++r) {
            uint8_t acc = 0;
            for (size_t k = 0; k < 4; ++k)
                acc ^= gf16_mul(MDS_M[r][k], s.cells[k][c]);
            out.cells[r][c] = acc;
        }
    return out;
}

State add_round_key(const State& s, uint64_t subkey) {
    State k = State::from_u64(subkey);
    State out = s;
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c) out.cells[r][c] ^= k.cells[r][c];
    return out;
}

uint64_t encrypt_block(uint64_t plaintext, const Key128& key) {
    return encrypt_trace(plaintext, key, nullptr);
}

uint64_t encrypt_trace(
    uint64_t plaintext, const Key128& key,
    const std::function<void(const RoundEvent&)>& on_event) {
    State s = State::from_u64(plaintext);
    s = add_round_key(s, key.subkey_at_boundary(0));
    if (on_event) on_event({-1, true, s});
    for (int step = 1; step <= NUM_STEPS; ++step) {
        for (int r = 0; r < ROUNDS_PER_STEP; ++r) {
            int round_index = (step - 1) * ROUNDS_PER_STEP + r;
            s = add_constant(s, round_index);
            s = sub_cells(s);
            s = shift_rows(s);
            s = mix_columns_serial(s);
            if (on_event) on_event({round_index, false, s});
        }
        s = add_round_key(s, key.subkey_at_boundary(step));
        if (on_event) on_event({(step * ROUNDS_PER_STEP) - 1, true, s});
    }
    return s.to_u64();
}

}  // namespace ledti
