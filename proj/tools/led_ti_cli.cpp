// Command-line front end. Links the C API only.
//
// Exit codes: 0 success / no evidence of leakage; 1 analysis negative (a TI
// property failed, leakage detected, self-test criterion failed); 2 usage,
// format or I/O error.

#include <cstdint>
#include <cstdio>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "led_ti.h"

namespace {

// Prints the pending error (if any) and maps a status to an exit code.
int finish(ledti_status s) {
    if (s == LEDTI_OK) return 0;
    std::fprintf(stderr, "error: %s\n", ledti_last_error());
    return s == LEDTI_ERR_VERIFY ? 1 : 2;
}

std::string hex64(uint64_t v) {
    char buf[17];
    ledti_format_hex64(v, buf);
    return buf;
}

struct EncryptArgs {
    std::string plaintext;
    std::string key;
    std::string impl = "ti";
    uint64_t seed = LEDTI_DEFAULT_SEED;
    bool verbose = false;
};

int cmd_encrypt(const EncryptArgs& a) {
    uint64_t pt = 0, key[2] = {0, 0};
    if (int rc = finish(ledti_parse_hex64(a.plaintext.c_str(), "plaintext",
                                          &pt)))
        return rc;
    if (int rc = finish(ledti_parse_hex128(a.key.c_str(), "key", key)))
        return rc;
    const ledti_impl impl = a.impl == "reference" ? LEDTI_IMPL_REFERENCE
                            : a.impl == "serial"  ? LEDTI_IMPL_SERIAL
                                                  : LEDTI_IMPL_TI;
    uint64_t ct = 0, cycles = 0;
    if (int rc = finish(ledti_encrypt(impl, pt, key, a.seed, &ct, &cycles)))
        return rc;
    std::printf("%s\n", hex64(ct).c_str());
    if (a.verbose && impl != LEDTI_IMPL_REFERENCE)
        std::printf("cycles=%llu\n", static_cast<unsigned long long>(cycles));
    return 0;
}

int cmd_verify_ti(const std::string& tables) {
    char report[8192] = {0};
    const ledti_status s = ledti_verify_tables(
        tables.empty() ? nullptr : tables.c_str(), report, sizeof report);
    if (s == LEDTI_OK || s == LEDTI_ERR_VERIFY) std::fputs(report, stdout);
    return finish(s);
}

struct GenArgs {
    std::string design;
    std::string model = "hd";
    uint32_t n = 1000;
    double sigma = 1.0;
    uint64_t seed = LEDTI_DEFAULT_SEED;
    std::string fixed_plaintext = "0000000000000000";
    std::string key = "0123456789abcdef0123456789abcdef";
    std::string out;
};

int cmd_gen_traces(const GenArgs& a) {
    ledti_trace_params p{};
    p.design = a.design == "led-ti" ? LEDTI_DESIGN_LED_TI : LEDTI_DESIGN_LED;
    p.model = a.model == "hw" ? LEDTI_MODEL_HW : LEDTI_MODEL_HD;
    p.n_traces = a.n;
    p.sigma = a.sigma;
    p.seed = a.seed;
    if (int rc = finish(ledti_parse_hex64(a.fixed_plaintext.c_str(),
                                          "fixed-plaintext",
                                          &p.fixed_plaintext)))
        return rc;
    if (int rc = finish(ledti_parse_hex128(a.key.c_str(), "key", p.key)))
        return rc;
    ledti_trace_summary summary{};
    if (int rc = finish(ledti_generate_traces(&p, a.out.c_str(), &summary)))
        return rc;
    std::printf("wrote %s: n_traces=%u samples_per_trace=%u fixed=%u "
                "random=%u\n",
                a.out.c_str(), summary.n_traces, summary.n_samples,
                summary.n_fixed, summary.n_random);
    return 0;
}

struct TvlaArgs {
    std::string in;
    double threshold = LEDTI_TVLA_THRESHOLD;
    std::string report;
};

int cmd_tvla(const TvlaArgs& a) {
    const std::string json = a.report.empty() ? "" : a.report + ".json";
    const std::string csv = a.report.empty() ? "" : a.report + ".csv";
    ledti_tvla_result res{};
    if (int rc = finish(ledti_tvla_file(a.in.c_str(), a.threshold,
                                        json.empty() ? nullptr : json.c_str(),
                                        csv.empty() ? nullptr : csv.c_str(),
                                        &res)))
        return rc;
    std::printf("traces: fixed=%llu random=%llu, samples=%u\n",
                static_cast<unsigned long long>(res.n_fixed),
                static_cast<unsigned long long>(res.n_random), res.n_samples);
    if (res.degenerate_warning)
        std::fprintf(stderr,
                     "warning: some samples are constant within both "
                     "classes; their t-values are degenerate\n");
    std::printf("max|t| = %.6f (threshold %.2f)\n", res.max_abs_t,
                res.threshold);
    std::printf("verdict: %s\n", res.leaks ? "Leaks" : "NoEvidence");
    if (!a.report.empty())
        std::printf("report: %s %s\n", json.c_str(), csv.c_str());
    return res.leaks ? 1 : 0;
}

void print_criterion(const char* line, void*) {
    std::puts(line);
    std::fflush(stdout);
}

int cmd_selftest() {
    const ledti_status s = ledti_selftest(print_criterion, nullptr);
    if (s == LEDTI_OK) {
        std::puts("all acceptance criteria passed");
        return 0;
    }
    return finish(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Byte-serial LED-128 laboratory: encryption, TI property "
                 "verification, power-trace synthesis and TVLA."};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() {
        return std::string("ledti ") + ledti_version();
    });

    EncryptArgs enc;
    auto* encrypt = app.add_subcommand(
        "encrypt", "Encrypt one 64-bit block under a 128-bit key");
    encrypt->add_option("plaintext", enc.plaintext, "16 hex digits")
        ->required();
    encrypt->add_option("key", enc.key, "32 hex digits")->required();
    encrypt
        ->add_option("--impl", enc.impl,
                     "implementation: reference, serial or ti")
        ->check(CLI::IsMember({"reference", "serial", "ti"}))
        ->capture_default_str();
    encrypt->add_option("--seed", enc.seed, "masking seed (ti only)")
        ->capture_default_str();
    encrypt->add_flag("--verbose", enc.verbose,
                      "also print the billed cycle count");

    std::string tables;
    auto* verify = app.add_subcommand(
        "verify-ti",
        "Exhaustively verify correctness, non-completeness and uniformity "
        "of the decomposed Sbox tables");
    verify->add_option("--tables", tables,
                       "decomposition file (default: built-in tables)");

    GenArgs gen;
    auto* gen_traces = app.add_subcommand(
        "gen-traces", "Synthesize a fixed-vs-random power-trace set");
    gen_traces
        ->add_option("--design", gen.design,
                     "datapath: led (unprotected) or led-ti (protected)")
        ->check(CLI::IsMember({"led", "led-ti"}))
        ->required();
    gen_traces->add_option("--n", gen.n, "number of traces (>= 2)")
        ->capture_default_str();
    gen_traces->add_option("--sigma", gen.sigma, "Gaussian noise std-dev")
        ->capture_default_str();
    gen_traces->add_option("--seed", gen.seed, "base seed of the protocol")
        ->capture_default_str();
    gen_traces
        ->add_option("--model", gen.model,
                     "leakage model: hd (Hamming distance) or hw (weight)")
        ->check(CLI::IsMember({"hd", "hw"}))
        ->capture_default_str();
    gen_traces
        ->add_option("--fixed-plaintext", gen.fixed_plaintext,
                     "plaintext of the fixed class, 16 hex digits")
        ->capture_default_str();
    gen_traces->add_option("--key", gen.key, "32 hex digits")
        ->capture_default_str();
    gen_traces->add_option("--out", gen.out, "output trace-set file")
        ->required();

    TvlaArgs tv;
    auto* tvla = app.add_subcommand(
        "tvla", "Welch fixed-vs-random t-test over a trace-set file");
    tvla->add_option("--in", tv.in, "trace-set file")->required();
    tvla->add_option("--threshold", tv.threshold, "|t| decision threshold")
        ->capture_default_str();
    tvla->add_option("--report", tv.report,
                     "report stem; writes <stem>.json and <stem>.csv");

    auto* selftest = app.add_subcommand(
        "selftest", "Run the acceptance suite (criteria AC1..AC9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems are exit 2
    }

    if (encrypt->parsed()) return cmd_encrypt(enc);
    if (verify->parsed()) return cmd_verify_ti(tables);
    if (gen_traces->parsed()) return cmd_gen_traces(gen);
    if (tvla->parsed()) return cmd_tvla(tv);
    if (selftest->parsed()) return cmd_selftest();
    return 2;
}
