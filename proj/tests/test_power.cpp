#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "datapath.hpp"
#include "errors.hpp"
#include "power.hpp"
#include "rng.hpp"
#include "trace_set.hpp"

using namespace ledti;

namespace {

// Minimal handmade log: two 4-bit registers, three cycles.
TransitionLog tiny_log() {
    TransitionLog log;
    log.registers = {{"a", 4}, {"b", 4}};
    log.cycles.resize(3);
    log.cycles[0].state = FsmState::INIT;  // empty cycle: no transitions
    log.cycles[1].state = FsmState::ADDCONSTANT;
    log.cycles[1].changes.push_back({0, 0x0, 0xF});  // one nibble 0 -> F
    log.cycles[2].state = FsmState::SBOX_CAL;
    log.cycles[2].changes.push_back({0, 0xF, 0x9});
    log.cycles[2].changes.push_back({1, 0x0, 0x3});
    return log;
}

}  // namespace

TEST_CASE("hamming helpers") {
    CHECK(hamming_weight(0) == 0);
    CHECK(hamming_weight(0xF) == 4);
    CHECK(hamming_weight(0xFFFFFFFFFFFFFFFFull) == 64);

    CHECK(hamming_distance(0x5, 4, 0x5, 4) == 0);
    CHECK(hamming_distance(0x0, 4, 0xF, 4) == 4);
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            CHECK(hamming_distance(uint64_t(a), 4, uint64_t(b), 4) ==
                  hamming_distance(uint64_t(b), 4, uint64_t(a), 4));

    // Width contract: mismatched widths and oversized values are errors.
    CHECK_THROWS_AS(hamming_distance(0, 4, 0, 6), Error);
    try {
        hamming_distance(0x10, 4, 0, 4);
        FAIL("expected an argument error");
    } catch (const Error& e) {
        CHECK(e.category() == ErrorCategory::Argument);
    }
}

TEST_CASE("synthesize_trace without noise counts bit flips exactly") {
    const TransitionLog log = tiny_log();
    LeakageConfig cfg;
    cfg.noise_sigma = 0.0;
    cfg.base_seed = 1;

    const Trace t = synthesize_trace(log, cfg);
    REQUIRE(t.samples.size() == 3);
    CHECK(t.samples[0] == 0.0f);  // empty cycle
    CHECK(t.samples[1] == 4.0f);  // 0x0 -> 0xF
    CHECK(t.samples[2] == 4.0f);  // hd(F,9)=2 plus hd(0,3)=2

    cfg.model = LeakageModel::HammingWeight;
    const Trace w = synthesize_trace(log, cfg);
    CHECK(w.samples[0] == 0.0f);
    CHECK(w.samples[1] == 4.0f);  // hw(F); equals HD from the zero value
    CHECK(w.samples[2] == 4.0f);  // hw(9)+hw(3)
}

TEST_CASE("synthesized traces are deterministic in the config") {
    const TransitionLog log = tiny_log();
    LeakageConfig cfg;
    cfg.noise_sigma = 2.5;
    cfg.base_seed = 77;
    const Trace a = synthesize_trace(log, cfg);
    const Trace b = synthesize_trace(log, cfg);
    REQUIRE(a.samples.size() == b.samples.size());
    for (size_t i = 0; i < a.samples.size(); ++i)
        CHECK(a.samples[i] == b.samples[i]);

    cfg.base_seed = 78;
    const Trace c = synthesize_trace(log, cfg);
    bool differs = false;
    for (size_t i = 0; i < a.samples.size(); ++i)
        differs = differs || a.samples[i] != c.samples[i];
    CHECK(differs);
}

TEST_CASE("noiseless samples are small non-negative integers") {
    auto run = run_protected(builtin_decomposition(), 0x1234u, Key128{5, 6},
                             Rng(9));
    LeakageConfig cfg;
    cfg.noise_sigma = 0.0;
    const Trace t = synthesize_trace(run.log, cfg);
    int total_bits = 0;
    for (const auto& r : run.log.registers) total_bits += r.width;
    for (float s : t.samples) {
        CHECK(s >= 0.0f);
        CHECK(s <= float(total_bits));
        CHECK(s == std::floor(s));
    }
}

TEST_CASE("live power sink equals offline synthesis over the same run") {
    const uint64_t mask_seed = 0x5EED;
    const uint64_t noise_seed = 0xA0A0;

    Simulator sim(Design::Protected, builtin_decomposition());
    sim.load_inputs(0xDEADBEEFull, Key128{1, 2}, Rng(mask_seed));
    LogCollector collector(sim.register_map());
    while (sim.running()) sim.step_cycle(&collector);
    const TransitionLog log = collector.take();

    LeakageConfig cfg;
    cfg.noise_sigma = 1.0;
    cfg.base_seed = noise_seed;
    const Trace offline = synthesize_trace(log, cfg);

    // The identical masked execution fed straight into a live sink must
    // give the same samples as synthesizing from the stored log.
    Simulator sim2(Design::Protected, builtin_decomposition());
    sim2.load_inputs(0xDEADBEEFull, Key128{1, 2}, Rng(mask_seed));
    PowerSink live(LeakageModel::HammingDistance, 1.0, noise_seed);
    while (sim2.running()) sim2.step_cycle(&live);
    const std::vector<float> live_samples = live.take_samples();

    REQUIRE(live_samples.size() == offline.samples.size());
    for (size_t i = 0; i < live_samples.size(); ++i)
        CHECK(live_samples[i] == offline.samples[i]);
}

TEST_CASE("generate_trace_set follows the fixed-vs-random protocol") {
    LeakageConfig cfg;
    cfg.noise_sigma = 1.0;
    cfg.base_seed = 0xCAFE;
    const uint32_t n = 400;
    const TraceSet ts = generate_trace_set(Design::Unprotected, n,
                                           TVLA_FIXED_PLAINTEXT, TVLA_KEY,
                                           cfg);
    REQUIRE(ts.traces.size() == n);
    CHECK(ts.n_samples == unprotected_cycle_total());
    CHECK(ts.sigma == 1.0);
    CHECK(ts.base_seed == 0xCAFE);

    uint32_t fixed = 0;
    for (const auto& t : ts.traces) {
        CHECK(t.samples.size() == ts.n_samples);  // identical lengths
        fixed += t.label == TraceClass::Fixed ? 1 : 0;
    }
    // Fair coin: within 5 sigma of n/2.
    const double sigma5 = 5.0 * std::sqrt(n / 4.0);
    CHECK(std::abs(double(fixed) - n / 2.0) < sigma5);

    // Determinism: the same config reproduces the set bit-for-bit.
    const TraceSet again = generate_trace_set(Design::Unprotected, n,
                                              TVLA_FIXED_PLAINTEXT, TVLA_KEY,
                                              cfg);
    for (size_t i = 0; i < ts.traces.size(); ++i) {
        CHECK(ts.traces[i].label == again.traces[i].label);
        CHECK(ts.traces[i].samples == again.traces[i].samples);
    }
}

TEST_CASE("for_each_trace streams the same content in index order") {
    LeakageConfig cfg;
    cfg.noise_sigma = 0.5;
    cfg.base_seed = 0xB0B;
    const TraceSet ts = generate_trace_set(Design::Unprotected, 50,
                                           TVLA_FIXED_PLAINTEXT, TVLA_KEY,
                                           cfg);
    uint32_t expected_index = 0;
    for_each_trace(Design::Unprotected, 50, TVLA_FIXED_PLAINTEXT, TVLA_KEY,
                   cfg,
                   [&](uint32_t index, TraceClass label,
                       std::vector<float>&& samples) {
                       REQUIRE(index == expected_index);
                       CHECK(label == ts.traces[index].label);
                       CHECK(samples == ts.traces[index].samples);
                       ++expected_index;
                   });
    CHECK(expected_index == 50);
}

TEST_CASE("protected fixed-class traces differ between trace indices") {
    // Same plaintext, same key: only the masks differ, and they must be
    // enough to decorrelate the raw (noise-free) traces.
    LeakageConfig cfg;
    cfg.noise_sigma = 0.0;
    cfg.base_seed = 0xD00D;
    std::vector<std::vector<float>> fixed_traces;
    for_each_trace(Design::Protected, 20, TVLA_FIXED_PLAINTEXT, TVLA_KEY, cfg,
                   [&](uint32_t, TraceClass label,
                       std::vector<float>&& samples) {
                       if (label == TraceClass::Fixed)
                           fixed_traces.push_back(std::move(samples));
                   });
    REQUIRE(fixed_traces.size() >= 2);
    CHECK(fixed_traces[0] != fixed_traces[1]);
}

TEST_CASE("trace generation rejects bad parameters") {
    LeakageConfig cfg;
    SUBCASE("too few traces") {
        try {
            generate_trace_set(Design::Unprotected, 1, 0, TVLA_KEY, cfg);
            FAIL("expected an argument error");
        } catch (const Error& e) {
            CHECK(e.category() == ErrorCategory::Argument);
        }
    }
    SUBCASE("negative sigma") {
        cfg.noise_sigma = -0.5;
        CHECK_THROWS_AS(
            generate_trace_set(Design::Unprotected, 10, 0, TVLA_KEY, cfg),
            Error);
    }
}
