// C ABI wrapper over the C++ core. Every entry point catches all exceptions,
// stores the message in a thread-local slot and maps the error category to a
// ledti_status; no exception ever crosses the ABI boundary.

#include "led_ti.h"

#include <cstring>
#include <exception>
#include <memory>
#include <sstream>
#include <string>

#include "datapath.hpp"
#include "errors.hpp"
#include "hexutil.hpp"
#include "led_core.hpp"
#include "power.hpp"
#include "rng.hpp"
#include "sbox_ti.hpp"
#include "selftest.hpp"
#include "trace_set.hpp"
#include "tvla.hpp"

namespace {

thread_local std::string t_last_error;

ledti_status to_status(ledti::ErrorCategory c) {
    using ledti::ErrorCategory;
    switch (c) {
        case ErrorCategory::Argument: return LEDTI_ERR_ARGUMENT;
        case ErrorCategory::Format: return LEDTI_ERR_FORMAT;
        case ErrorCategory::Io: return LEDTI_ERR_IO;
        case ErrorCategory::Verify: return LEDTI_ERR_VERIFY;
        case ErrorCategory::State: return LEDTI_ERR_STATE;
    }
    return LEDTI_ERR_INTERNAL;
}

ledti_status fail(ledti_status s, const std::string& message) {
    t_last_error = message;
    return s;
}

// Runs `body`, translating exceptions into status codes.
template <typename Fn>
ledti_status guarded(Fn&& body) {
    try {
        return body();
    } catch (const ledti::Error& e) {
        return fail(to_status(e.category()), e.what());
    } catch (const std::exception& e) {
        return fail(LEDTI_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LEDTI_ERR_INTERNAL, "unknown exception");
    }
}

ledti_status require(bool ok, const char* what) {
    return ok ? LEDTI_OK
              : fail(LEDTI_ERR_ARGUMENT, std::string(what) + " is required");
}

ledti::Key128 to_key(const uint64_t key[2]) {
    return ledti::Key128{key[0], key[1]};
}

}  // namespace

extern "C" {

struct ledti_sim {
    ledti::Design design;
    ledti::Simulator sim;
    ledti::TransitionLog log;
    bool has_log = false;

    explicit ledti_sim(ledti::Design d)
        : design(d), sim(d, ledti::builtin_decomposition()) {}
};

const char* ledti_last_error(void) { return t_last_error.c_str(); }

const char* ledti_version(void) { return "1.0.0"; }

ledti_status ledti_parse_hex64(const char* text, const char* field,
                               uint64_t* out) {
    if (auto s = require(text && out, "text/out pointer")) return s;
    return guarded([&] {
        *out = ledti::parse_hex64(text, field ? field : "value");
        return LEDTI_OK;
    });
}

ledti_status ledti_parse_hex128(const char* text, const char* field,
                                uint64_t out[2]) {
    if (auto s = require(text && out, "text/out pointer")) return s;
    return guarded([&] {
        uint64_t hi = 0, lo = 0;
        ledti::parse_hex128(text, field ? field : "value", hi, lo);
        out[0] = hi;
        out[1] = lo;
        return LEDTI_OK;
    });
}

void ledti_format_hex64(uint64_t value, char out[17]) {
    if (!out) return;
    const std::string s = ledti::to_hex64(value);
    std::memcpy(out, s.c_str(), 17);
}

ledti_status ledti_encrypt(ledti_impl impl, uint64_t plaintext,
                           const uint64_t key[2], uint64_t seed,
                           uint64_t* ciphertext, uint64_t* cycles) {
    if (auto s = require(key && ciphertext, "key/ciphertext pointer"))
        return s;
    return guarded([&] {
        const ledti::Key128 k = to_key(key);
        uint64_t ct = 0, cy = 0;
        switch (impl) {
            case LEDTI_IMPL_REFERENCE:
                ct = ledti::encrypt_block(plaintext, k);
                break;
            case LEDTI_IMPL_SERIAL: {
                ledti::Simulator sim(ledti::Design::Unprotected,
                                     ledti::builtin_decomposition());
                sim.load_inputs(plaintext, k, ledti::Rng(seed));
                ct = sim.run_to_completion(nullptr);
                cy = sim.cycle();
                break;
            }
            case LEDTI_IMPL_TI: {
                ledti::Simulator sim(ledti::Design::Protected,
                                     ledti::builtin_decomposition());
                sim.load_inputs(plaintext, k, ledti::Rng(seed));
                ct = sim.run_to_completion(nullptr);
                cy = sim.cycle();
                break;
            }
            default:
                return fail(LEDTI_ERR_ARGUMENT,
                            "impl must be reference (0), serial (1) or ti "
                            "(2)");
        }
        *ciphertext = ct;
        if (cycles) *cycles = cy;
        return LEDTI_OK;
    });
}

ledti_status ledti_verify_tables(const char* path, char* report,
                                 size_t report_cap) {
    return guarded([&] {
        const ledti::SboxDecomposition d =
            path ? ledti::parse_decomposition(path)
                 : ledti::builtin_decomposition();
        const ledti::VerifyReport reports[3] = {
            ledti::verify_correctness(d), ledti::verify_noncompleteness(d),
            ledti::verify_uniformity(d)};
        std::ostringstream os;
        bool all_pass = true;
        for (const auto& r : reports) {
            os << r.summary() << '\n';  // includes capped counterexamples
            all_pass = all_pass && r.pass;
        }
        if (report && report_cap > 0) {
            const std::string text = os.str();
            const size_t n = std::min(report_cap - 1, text.size());
            std::memcpy(report, text.data(), n);
            report[n] = '\0';
        }
        if (!all_pass)
            return fail(LEDTI_ERR_VERIFY,
                        "at least one TI property does not hold");
        return LEDTI_OK;
    });
}

ledti_status ledti_generate_traces(const ledti_trace_params* params,
                                   const char* out_path,
                                   ledti_trace_summary* summary) {
    if (auto s = require(params && out_path, "params/out_path pointer"))
        return s;
    return guarded([&] {
        if (params->model != LEDTI_MODEL_HD && params->model != LEDTI_MODEL_HW)
            return fail(LEDTI_ERR_ARGUMENT, "model must be hd (0) or hw (1)");
        if (params->design != LEDTI_DESIGN_LED &&
            params->design != LEDTI_DESIGN_LED_TI)
            return fail(LEDTI_ERR_ARGUMENT,
                        "design must be led (0) or led-ti (1)");
        const ledti::Design design = params->design == LEDTI_DESIGN_LED_TI
                                         ? ledti::Design::Protected
                                         : ledti::Design::Unprotected;
        const ledti::LeakageConfig cfg{
            params->model == LEDTI_MODEL_HW
                ? ledti::LeakageModel::HammingWeight
                : ledti::LeakageModel::HammingDistance,
            params->sigma, params->seed};
        const ledti::TraceSet ts = ledti::generate_trace_set(
            design, params->n_traces, params->fixed_plaintext,
            to_key(params->key), cfg);
        ledti::write_trace_set(ts, out_path);
        if (summary) {
            summary->n_traces = static_cast<uint32_t>(ts.traces.size());
            summary->n_samples = ts.n_samples;
            uint32_t fixed = 0;
            for (const auto& t : ts.traces)
                if (t.label == ledti::TraceClass::Fixed) ++fixed;
            summary->n_fixed = fixed;
            summary->n_random =
                static_cast<uint32_t>(ts.traces.size()) - fixed;
        }
        return LEDTI_OK;
    });
}

ledti_status ledti_tvla_file(const char* in_path, double threshold,
                             const char* json_report_path,
                             const char* csv_report_path,
                             ledti_tvla_result* result) {
    if (auto s = require(in_path && result, "in_path/result pointer"))
        return s;
    return guarded([&] {
        const ledti::TraceSet ts = ledti::read_trace_set(in_path);
        const ledti::TvlaReport rep =
            ledti::tvla_fixed_vs_random(ts, threshold);
        if (json_report_path) ledti::write_tvla_json(rep, json_report_path);
        if (csv_report_path) ledti::write_tvla_csv(rep, csv_report_path);
        result->max_abs_t = rep.max_abs_t;
        result->threshold = rep.threshold;
        result->leaks = rep.verdict == ledti::Verdict::Leaks ? 1 : 0;
        result->degenerate_warning = rep.degenerate_warning ? 1 : 0;
        result->n_fixed = rep.n_fixed;
        result->n_random = rep.n_random;
        result->n_samples = static_cast<uint32_t>(rep.t_values.size());
        return LEDTI_OK;
    });
}

ledti_status ledti_selftest(ledti_line_fn on_line, void* user) {
    return guarded([&] {
        const auto results =
            ledti::run_acceptance_suite([&](const ledti::CriterionResult& r) {
                if (on_line) on_line(ledti::format_criterion(r).c_str(), user);
            });
        if (!ledti::all_passed(results))
            return fail(LEDTI_ERR_VERIFY,
                        "at least one acceptance criterion failed");
        return LEDTI_OK;
    });
}

ledti_status ledti_sim_create(ledti_design design, ledti_sim** out) {
    if (auto s = require(out != nullptr, "out pointer")) return s;
    return guarded([&] {
        if (design != LEDTI_DESIGN_LED && design != LEDTI_DESIGN_LED_TI)
            return fail(LEDTI_ERR_ARGUMENT,
                        "design must be led (0) or led-ti (1)");
        *out = new ledti_sim(design == LEDTI_DESIGN_LED_TI
                                 ? ledti::Design::Protected
                                 : ledti::Design::Unprotected);
        return LEDTI_OK;
    });
}

void ledti_sim_destroy(ledti_sim* sim) { delete sim; }

ledti_status ledti_sim_load(ledti_sim* sim, uint64_t plaintext,
                            const uint64_t key[2], uint64_t seed) {
    if (auto s = require(sim && key, "sim/key pointer")) return s;
    return guarded([&] {
        sim->sim.load_inputs(plaintext, to_key(key), ledti::Rng(seed));
        return LEDTI_OK;
    });
}

ledti_status ledti_sim_run(ledti_sim* sim, uint64_t* ciphertext,
                           uint64_t* cycles) {
    if (auto s = require(sim && ciphertext, "sim/ciphertext pointer"))
        return s;
    return guarded([&] {
        if (!sim->sim.running())
            return fail(LEDTI_ERR_STATE, "no run armed: call ledti_sim_load");
        ledti::LogCollector collector(sim->sim.register_map());
        *ciphertext = sim->sim.run_to_completion(&collector);
        sim->log = collector.take();
        sim->has_log = true;
        if (cycles) *cycles = sim->log.cycle_count();
        return LEDTI_OK;
    });
}

ledti_status ledti_sim_export_log(ledti_sim* sim, const char* csv_path) {
    if (auto s = require(sim && csv_path, "sim/csv_path pointer")) return s;
    return guarded([&] {
        if (!sim->has_log)
            return fail(LEDTI_ERR_STATE,
                        "no completed run to export: call ledti_sim_run");
        sim->log.export_csv_file(csv_path);
        return LEDTI_OK;
    });
}

}  // extern "C"
