#include "sbox_ti.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "led_core.hpp"

namespace ledti {

namespace {

uint8_t comp_lookup(const std::array<std::array<uint8_t, 256>, 3>& t, int i,
                    const Share3& in) {
    const uint8_t shares[3] = {in.s0, in.s1, in.s2};
    const uint8_t first = shares[(i + 1) % 3];
    const uint8_t second = shares[(i + 2) % 3];
    return t[static_cast<size_t>(i)][(first << 4) | second];
}

Share3 stage(const std::array<std::array<uint8_t, 256>, 3>& t,
             const Share3& in) {
    return {comp_lookup(t, 0, in), comp_lookup(t, 1, in),
            comp_lookup(t, 2, in)};
}

void record_failure(VerifyReport& r, const std::string& detail) {
    ++r.failures;
    r.pass = false;
    if (r.counterexamples.size() < MAX_COUNTEREXAMPLES)
        r.counterexamples.push_back(detail);
}

std::string share3_str(const Share3& s) {
    std::ostringstream os;
    os << std::hex << "(" << int(s.s0) << "," << int(s.s1) << "," << int(s.s2)
       << ")";
    return os.str();
}

}  // namespace

Share3 g_stage(const SboxDecomposition& d, const Share3& in) {
    return stage(d.g, in);
}

Share3 f_stage(const SboxDecomposition& d, const Share3& in) {
    return stage(d.f, in);
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    os << property << ": " << (pass ? "PASS" : "FAIL") << " (" << checked
       << " cases";
    if (!pass) os << ", " << failures << " failures";
    os << ")";
    for (const auto& c : counterexamples) os << "\n  " << c;
    if (failures > counterexamples.size())
        os << "\n  ... " << (failures - counterexamples.size()) << " more";
    return os.str();
}

VerifyReport verify_correctness(const SboxDecomposition& d) {
    VerifyReport r;
    r.property = "correctness";
    for (uint8_t x = 0; x < 16; ++x) {
        for (int s1 = 0; s1 < 16; ++s1) {
            for (int s2 = 0; s2 < 16; ++s2) {
                const Share3 in{static_cast<uint8_t>(x ^ s1 ^ s2),
                                static_cast<uint8_t>(s1),
                                static_cast<uint8_t>(s2)};
                const uint8_t got = recombine_3to1(f_stage(d, g_stage(d, in)));
                ++r.checked;
                if (got != sbox_lookup(x)) {
                    std::ostringstream os;
                    os << std::hex << "x=" << int(x) << " sharing="
                       << share3_str(in) << " recombined=" << int(got)
                       << " expected=" << int(sbox_lookup(x));
                    record_failure(r, os.str());
                }
            }
        }
    }
    return r;
}

VerifyReport verify_noncompleteness(const SboxDecomposition& d) {
    VerifyReport r;
    r.property = "non-completeness";
    const char* stage_name[2] = {"G", "F"};
    for (int st = 0; st < 2; ++st) {
        const auto& t = (st == 0) ? d.g : d.f;
        for (int i = 0; i < 3; ++i) {
            // Fix the two visible shares, sweep the excluded share i.
            for (int a = 0; a < 16; ++a) {
                for (int b = 0; b < 16; ++b) {
                    int baseline = -1;
                    for (int sweep = 0; sweep < 16; ++sweep) {
                        uint8_t shares[3];
                        shares[i] = static_cast<uint8_t>(sweep);
                        shares[(i + 1) % 3] = static_cast<uint8_t>(a);
                        shares[(i + 2) % 3] = static_cast<uint8_t>(b);
                        const Share3 in{shares[0], shares[1], shares[2]};
                        const Share3 out = stage(t, in);
                        const uint8_t comp[3] = {out.s0, out.s1, out.s2};
                        ++r.checked;
                        if (baseline < 0) {
                            baseline = comp[i];
                        } else if (comp[i] != baseline) {
                            std::ostringstream os;
                            os << std::hex << stage_name[st] << (i + 1)
                               << " depends on share " << i << ": sharing "
                               << share3_str(in) << " gives " << int(comp[i])
                               << " vs " << baseline;
                            record_failure(r, os.str());
                        }
                    }
                }
            }
        }
    }
    return r;
}

VerifyReport verify_uniformity(const SboxDecomposition& d) {
    VerifyReport r;
    r.property = "uniformity";
    const char* stage_name[2] = {"G", "F"};
    for (int st = 0; st < 2; ++st) {
        const auto& t = (st == 0) ? d.g : d.f;
        for (uint8_t x = 0; x < 16; ++x) {
            // Count hits per output sharing across the 256 input sharings
            // of x. (o0, o1) indexes the sharing; o2 must keep the stage
            // output consistent or the fiber is not a sharing of one value.
            std::array<int, 256> hits{};
            int stage_out = -1;
            bool fiber_ok = true;
            for (int s1 = 0; s1 < 16 && fiber_ok; ++s1) {
                for (int s2 = 0; s2 < 16 && fiber_ok; ++s2) {
                    const Share3 in{static_cast<uint8_t>(x ^ s1 ^ s2),
                                    static_cast<uint8_t>(s1),
                                    static_cast<uint8_t>(s2)};
                    const Share3 out = stage(t, in);
                    ++r.checked;
                    const int y = recombine_3to1(out);
                    if (stage_out < 0) stage_out = y;
                    if (y != stage_out) {
                        std::ostringstream os;
                        os << std::hex << stage_name[st] << ": x=" << int(x)
                           << " sharing " << share3_str(in)
                           << " recombines to " << y << " not " << stage_out;
                        record_failure(r, os.str());
                        fiber_ok = false;
                        break;
                    }
                    ++hits[(out.s0 << 4) | out.s1];
                }
            }
            if (!fiber_ok) continue;
            for (int o = 0; o < 256; ++o) {
                if (hits[o] != 1) {
                    std::ostringstream os;
                    os << std::hex << stage_name[st] << ": x=" << int(x)
                       << " output sharing (" << (o >> 4) << "," << (o & 15)
                       << ",rest) hit " << std::dec << hits[o]
                       << " times, expected 1";
                    record_failure(r, os.str());
                }
            }
        }
    }
    return r;
}

void verify_or_throw(const SboxDecomposition& d) {
    for (const auto& report :
         {verify_correctness(d), verify_noncompleteness(d),
          verify_uniformity(d)}) {
        if (!report.pass)
            throw verify_error("decomposition rejected: " + report.summary());
    }
}

SboxDecomposition parse_decomposition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open decomposition file: " + path);

    std::vector<uint8_t> nibbles;
    nibbles.reserve(6 * 256);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok.size() != 1 || !std::isxdigit(static_cast<unsigned char>(tok[0])))
                throw format_error("decomposition file " + path + " line " +
                                   std::to_string(line_no) +
                                   ": token '" + tok +
                                   "' is not a single hex nibble");
            nibbles.push_back(static_cast<uint8_t>(
                std::stoi(tok, nullptr, 16)));
        }
    }
    if (nibbles.size() != 6 * 256)
        throw format_error("decomposition file " + path + ": expected " +
                           std::to_string(6 * 256) + " nibbles, found " +
                           std::to_string(nibbles.size()));

    SboxDecomposition d;
    size_t pos = 0;
    for (int i = 0; i < 3; ++i)
        for (auto& v : d.g[static_cast<size_t>(i)]) v = nibbles[pos++];
    for (int i = 0; i < 3; ++i)
        for (auto& v : d.f[static_cast<size_t>(i)]) v = nibbles[pos++];

    return d;
}

SboxDecomposition load_decomposition(const std::string& path) {
    SboxDecomposition d = parse_decomposition(path);
    verify_or_throw(d);
    return d;
}

void save_decomposition(const SboxDecomposition& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write decomposition file: " + path);
    out << "# Three-share decomposed Sbox tables: blocks G1 G2 G3 F1 F2 F3.\n"
           "# Shares are 0-based (s0, s1, s2). Component i computes output share i\n"
           "# and sees only the other two shares; its 256-entry block is indexed by\n"
           "#   (first_share << 4) | second_share\n"
           "# where (first, second) = (s1, s2) for component 0, (s2, s0) for\n"
           "# component 1, (s0, s1) for component 2 -- i.e. (s_{i+1}, s_{i+2}) mod 3.\n"
           "# Each block lists 256 hex nibbles, 16 per line, first index ascending.\n";
    const char* names[6] = {"G1", "G2", "G3", "F1", "F2", "F3"};
    for (int b = 0; b < 6; ++b) {
        const auto& t = (b < 3) ? d.g[static_cast<size_t>(b)]
                                : d.f[static_cast<size_t>(b - 3)];
        out << "# block " << names[b] << "\n";
        for (int row = 0; row < 16; ++row) {
            for (int col = 0; col < 16; ++col) {
                out << std::hex << std::uppercase
                    << int(t[static_cast<size_t>(row * 16 + col)])
                    << (col == 15 ? '\n' : ' ');
            }
        }
    }
    if (!out) throw io_error("failed writing decomposition file: " + path);
}

}  // namespace ledti
