#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "shares.hpp"

namespace ledti {

// Two-stage three-share decomposition of the cipher Sbox: S = F ∘ G.
// Component i computes output share i from the two input shares it is
// allowed to see, (share_{i+1}, share_{i+2}) mod 3, via a 256-entry table
// indexed by (first_share << 4) | second_share. Non-completeness is thus
// structural: the table for share i has no input wired to share i.
struct SboxDecomposition {
    std::array<std::array<uint8_t, 256>, 3> g{};
    std::array<std::array<uint8_t, 256>, 3> f{};
};

// The decomposition shipped with the library (verified at first use).
const SboxDecomposition& builtin_decomposition();

Share3 g_stage(const SboxDecomposition& d, const Share3& in);
Share3 f_stage(const SboxDecomposition& d, const Share3& in);

// Outcome of one exhaustive property check. Failures are enumerated as
// human-readable counterexamples (capped; `failures` holds the full count).
struct VerifyReport {
    std::string property;
    bool pass = true;
    uint64_t checked = 0;
    uint64_t failures = 0;
    std::vector<std::string> counterexamples;

    std::string summary() const;
};

inline constexpr size_t MAX_COUNTEREXAMPLES = 8;

// Recombined F(G(x)) equals the Sbox for every input and every sharing.
VerifyReport verify_correctness(const SboxDecomposition& d);
// Sweeping the share a component must not see never changes its output.
VerifyReport verify_noncompleteness(const SboxDecomposition& d);
// Per stage and unshared input, the 256 input sharings map onto the 256
// valid output sharings exactly once each.
VerifyReport verify_uniformity(const SboxDecomposition& d);

// Runs all three verifiers; throws Verify error on the first failure.
void verify_or_throw(const SboxDecomposition& d);

// Text format: '#' comments, then blocks G1 G2 G3 F1 F2 F3 of 256 hex
// nibbles each, whitespace-separated, index ascending. Loading verifies the
// decomposition and refuses one that fails any property;
// parse_decomposition reads the format without judging the properties (the
// verification front-end reports on failing tables instead of refusing).
SboxDecomposition parse_decomposition(const std::string& path);
SboxDecomposition load_decomposition(const std::string& path);
void save_decomposition(const SboxDecomposition& d, const std::string& path);

}  // namespace ledti
