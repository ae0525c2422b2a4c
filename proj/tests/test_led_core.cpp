#include <set>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "led_core.hpp"
#include "rng.hpp"

using namespace ledti;

namespace {

State random_state(Rng& rng) {
    return State::from_u64(rng.next_u64());
}

}  // namespace

TEST_CASE("sbox matches the cipher table and is a permutation") {
    CHECK(sbox_lookup(0x0) == 0xC);
    CHECK(sbox_lookup(0xF) == 0x2);
    std::set<uint8_t> image;
    for (int x = 0; x < 16; ++x) image.insert(sbox_lookup(uint8_t(x)));
    CHECK(image.size() == 16);
    for (int x = 0; x < 16; ++x)
        CHECK(SBOX_INV[sbox_lookup(uint8_t(x))] == x);
}

TEST_CASE("state round-trips to and from 64-bit blocks") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const uint64_t v = rng.next_u64();
        CHECK(State::from_u64(v).to_u64() == v);
    }
    // MSB lands at cell [0][0].
    const State s = State::from_u64(0xF000000000000000ull);
    CHECK(s.cells[0][0] == 0xF);
    CHECK(s.cells[3][3] == 0x0);
}

TEST_CASE("gf16 multiplication laws hold exhaustively") {
    CHECK(gf16_mul(0x2, 0x8) == 0x3);  // x * x^3 = x^4 = x + 1
    for (int a = 0; a < 16; ++a) {
        CHECK(gf16_mul(uint8_t(a), 0) == 0);
        CHECK(gf16_mul(uint8_t(a), 1) == a);
        for (int b = 0; b < 16; ++b) {
            CHECK(gf16_mul(uint8_t(a), uint8_t(b)) ==
                  gf16_mul(uint8_t(b), uint8_t(a)));
            for (int c = 0; c < 16; ++c) {
                CHECK(gf16_mul(gf16_mul(uint8_t(a), uint8_t(b)), uint8_t(c)) ==
                      gf16_mul(uint8_t(a), gf16_mul(uint8_t(b), uint8_t(c))));
                CHECK(gf16_mul(uint8_t(a), uint8_t(b ^ c)) ==
                      (gf16_mul(uint8_t(a), uint8_t(b)) ^
                       gf16_mul(uint8_t(a), uint8_t(c))));
            }
        }
    }
}

TEST_CASE("round constants follow the 6-bit LFSR") {
    // Advanced before first use, so round 0 already sees 0x01.
    const std::vector<uint8_t> head = {0x01, 0x03, 0x07, 0x0F,
                                       0x1F, 0x3E, 0x3D, 0x3B};
    for (size_t i = 0; i < head.size(); ++i)
        CHECK(round_constant(int(i)) == head[i]);
    uint8_t rc = 0;
    for (int i = 0; i < NUM_ROUNDS; ++i) {
        rc = rc_advance(rc);
        CHECK(round_constant(i) == rc);
        CHECK(rc < 64);
    }
}

TEST_CASE("add_constant touches only the first two columns") {
    Rng rng(22);
    for (int round = 0; round < NUM_ROUNDS; ++round) {
        const State s = random_state(rng);
        const State t = add_constant(s, round);
        for (int r = 0; r < 4; ++r)
            for (int c = 2; c < 4; ++c) CHECK(t.cells[r][c] == s.cells[r][c]);
        CHECK(add_constant(t, round) == s);  // XOR involution
    }
}

TEST_CASE("add_constant round 0 on the zero state is the frozen pattern") {
    // Key-size constants (8,0,8,0) ⊕ row indices in column 0; rc = 0x01
    // split (rc>>3, rc&7) alternating down column 1.
    const State t = add_constant(State::from_u64(0), 0);
    CHECK(t.to_u64() == 0x80001100A0003100ull);
}

TEST_CASE("add_constant rejects out-of-range round indices") {
    CHECK_THROWS_AS(add_constant(State{}, -1), Error);
    CHECK_THROWS_AS(add_constant(State{}, NUM_ROUNDS), Error);
}

TEST_CASE("sub_cells applies the sbox cellwise and inverts") {
    State zero = State::from_u64(0);
    const State t = sub_cells(zero);
    for (const auto& row : t.cells)
        for (uint8_t v : row) CHECK(v == 0xC);

    Rng rng(33);
    for (int i = 0; i < 50; ++i) {
        const State s = random_state(rng);
        const State u = sub_cells(s);
        State back = u;
        for (auto& row : back.cells)
            for (auto& v : row) v = SBOX_INV[v];
        CHECK(back == s);
    }
}

TEST_CASE("shift_rows rotates row r left by r") {
    Rng rng(44);
    const State s = random_state(rng);
    const State t = shift_rows(s);
    for (int c = 0; c < 4; ++c) {
        CHECK(t.cells[0][c] == s.cells[0][c]);            // row 0 fixed
        CHECK(t.cells[2][c] == s.cells[2][(c + 2) % 4]);  // [a,b,c,d]->[c,d,a,b]
    }
    State four = s;
    for (int i = 0; i < 4; ++i) four = shift_rows(four);
    CHECK(four == s);
}

TEST_CASE("mix_columns_serial is linear and equals the MDS fourth power") {
    CHECK(mix_columns_serial(State::from_u64(0)).to_u64() == 0);

    Rng rng(55);
    for (int i = 0; i < 50; ++i) {
        const State x = random_state(rng), y = random_state(rng);
        State xy;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                xy.cells[r][c] = x.cells[r][c] ^ y.cells[r][c];
        const State mx = mix_columns_serial(x), my = mix_columns_serial(y);
        State mxy;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                mxy.cells[r][c] = mx.cells[r][c] ^ my.cells[r][c];
        CHECK(mix_columns_serial(xy) == mxy);
    }

    // M = A^4, recomputed here through the field-multiplication oracle.
    std::array<std::array<uint8_t, 4>, 4> m = {};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    for (int p = 0; p < 4; ++p) {
        std::array<std::array<uint8_t, 4>, 4> next = {};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k)
                    next[i][j] ^= gf16_mul(MDS_A[i][k], m[k][j]);
        m = next;
    }
    CHECK(m == MDS_M);

    // Column (1,0,0,0)^T maps to the first column of M.
    State e;
    e.cells[0][0] = 1;
    const State me = mix_columns_serial(e);
    for (int r = 0; r < 4; ++r) CHECK(me.cells[r][0] == MDS_M[r][0]);
}

TEST_CASE("add_round_key XORs the subkey cellwise") {
    Rng rng(66);
    const State s = random_state(rng);
    CHECK(add_round_key(s, 0) == s);
    const State t = add_round_key(s, 0xDEADBEEF12345678ull);
    CHECK(add_round_key(t, 0xDEADBEEF12345678ull) == s);
    CHECK(add_round_key(State::from_u64(0x0123456789ABCDEFull),
                        0xFFFFFFFFFFFFFFFFull)
              .to_u64() == 0xFEDCBA9876543210ull);
}

TEST_CASE("subkeys alternate starting from the high half") {
    const Key128 key{0x1111111111111111ull, 0x2222222222222222ull};
    for (int s = 0; s <= NUM_STEPS; ++s)
        CHECK(key.subkey_at_boundary(s) == (s % 2 == 0 ? key.k1 : key.k2));
}

TEST_CASE("encrypt_block reproduces the frozen vectors") {
    // Cross-checked between two independently written implementations
    // before freezing.
    CHECK(encrypt_block(0, Key128{0, 0}) == 0xA41A1CC95B636A73ull);
    CHECK(encrypt_block(0x0123456789ABCDEFull,
                        Key128{0x0123456789ABCDEFull,
                               0x0123456789ABCDEFull}) ==
          0x34B12CD42C285D6Bull);
    CHECK(encrypt_block(0xFEDCBA9876543210ull,
                        Key128{0x0011223344556677ull,
                               0x8899AABBCCDDEEFFull}) ==
          0x376CB1979A10B823ull);
    CHECK(encrypt_block(0xDEADBEEFCAFEF00Dull,
                        Key128{0x0F1E2D3C4B5A6978ull,
                               0x8796A5B4C3D2E1F0ull}) ==
          0x1322B0367369182Eull);
    CHECK(encrypt_block(0xFFFFFFFFFFFFFFFFull,
                        Key128{0x0000000000000000ull,
                               0x0000000000000001ull}) ==
          0x2B10EA936EE5B58Full);
}

TEST_CASE("encrypt_trace emits 48 rounds and 13 key additions in order") {
    int rounds = 0, adds = 0, expected_round = 0;
    std::vector<int> ak_after;
    const uint64_t ct = encrypt_trace(
        0x0123456789ABCDEFull, Key128{0xAAAA, 0xBBBB},
        [&](const RoundEvent& e) {
            if (e.after_add_key) {
                ++adds;
                ak_after.push_back(e.round_index);
            } else {
                CHECK(e.round_index == expected_round);
                ++expected_round;
                ++rounds;
            }
        });
    CHECK(rounds == NUM_ROUNDS);
    CHECK(adds == NUM_STEPS + 1);  // initial + one per step
    REQUIRE(ak_after.size() == 13);
    CHECK(ak_after.front() == -1);
    for (int s = 0; s < NUM_STEPS; ++s)
        CHECK(ak_after[size_t(s) + 1] == 4 * s + 3);
    CHECK(ct == encrypt_block(0x0123456789ABCDEFull, Key128{0xAAAA, 0xBBBB}));
}

TEST_CASE("encryption is injective on a plaintext sample") {
    const Key128 key{0xCAFEF00DDEADBEEFull, 0x0123456789ABCDEFull};
    Rng rng(77);
    std::set<uint64_t> cts;
    for (int i = 0; i < 10000; ++i)
        cts.insert(encrypt_block(rng.next_u64(), key));
    CHECK(cts.size() == 10000);
}

TEST_CASE("no stuck-at bits: single-bit plaintext flips change the output") {
    Rng rng(88);
    for (int i = 0; i < 100; ++i) {
        const uint64_t pt = rng.next_u64();
        const Key128 key{rng.next_u64(), rng.next_u64()};
        const uint64_t base = encrypt_block(pt, key);
        for (int b = 0; b < 64; ++b)
            CHECK(encrypt_block(pt ^ (1ull << b), key) != base);
    }
}
