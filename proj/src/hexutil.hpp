#pragma once

#include <cstdint>
#include <string>

namespace ledti {

// Hex encoding of block values. Big-endian nibble order: the first hex digit
// is the most significant nibble of the integer, matching how cipher test
// vectors are written.
std::string to_hex64(uint64_t v);

// Parses exactly 16 hex chars. `field` names the value in error messages.
uint64_t parse_hex64(const std::string& s, const std::string& field);

// Parses exactly 32 hex chars into (high 64, low 64).
void parse_hex128(const std::string& s, const std::string& field,
                  uint64_t& hi, uint64_t& lo);

}  // namespace ledti
