#include "hexutil.hpp"

#include "errors.hpp"

namespace ledti {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

uint64_t parse_fixed(const std::string& s, size_t width,
                     const std::string& field) {
    if (s.size() != width) {
        throw argument_error(field + ": expected " + std::to_string(width) +
                             " hex chars, got " + std::to_string(s.size()));
    }
    uint64_t v = 0;
    for (char c : s) {
        int d = hex_digit(c);
        if (d < 0) {
            throw argument_error(field + ": invalid hex character '" +
                                 std::string(1, c) + "'");
        }
        v = (v << 4) | static_cast<uint64_t>(d);
    }
    return v;
}

}  // namespace

std::string to_hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

uint64_t parse_hex64(const std::string& s, const std::string& field) {
    return parse_fixed(s, 16, field);
}

void parse_hex128(const std::string& s, const std::string& field,
                  uint64_t& hi, uint64_t& lo) {
    if (s.size() != 32) {
        throw argument_error(field + ": expected 32 hex chars, got " +
                             std::to_string(s.size()));
    }
    hi = parse_fixed(s.substr(0, 16), 16, field);
    lo = parse_fixed(s.substr(16), 16, field);
}

}  // namespace ledti
