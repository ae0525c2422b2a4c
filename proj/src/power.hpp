#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "datapath.hpp"
#include "led_core.hpp"
#include "rng.hpp"

namespace ledti {

enum class LeakageModel : uint8_t {
    HammingDistance = 0,  // popcount(old ^ new) per transition
    HammingWeight = 1,    // popcount(new) per transition
};

enum class TraceClass : uint8_t {
    Fixed = 0,
    Random = 1,
};

struct LeakageConfig {
    LeakageModel model = LeakageModel::HammingDistance;
    double noise_sigma = 1.0;  // must be >= 0
    uint64_t base_seed = 0;
};

struct Trace {
    TraceClass label = TraceClass::Fixed;
    std::vector<float> samples;  // one per clock cycle
};

// Defaults for the fixed-vs-random protocol. The fixed class encrypts the
// all-zero block; the key is an arbitrary published constant shared by both
// classes; the base seed makes bare runs reproducible.
inline constexpr uint64_t TVLA_FIXED_PLAINTEXT = 0;
inline constexpr Key128 TVLA_KEY{0x0123456789ABCDEFull,
                                 0x0123456789ABCDEFull};
inline constexpr uint64_t DEFAULT_BASE_SEED = 0x1ED5EED;

int hamming_weight(uint64_t v);

// popcount(a ^ b) for two bit-strings of declared widths; the widths must
// match and both values must fit them.
int hamming_distance(uint64_t a, int width_a, uint64_t b, int width_b);

// Sink that turns register activity into one leakage sample per cycle:
// sum of the model's per-transition contribution plus N(0, sigma^2) noise,
// one gaussian per cycle in cycle order (none drawn when sigma is 0).
class PowerSink : public TransitionSink {
public:
    PowerSink(LeakageModel model, double sigma, uint64_t noise_seed);

    void begin_cycle(uint64_t cycle, FsmState state) override;
    void record(const Transition& t, int width) override;
    void end_cycle() override;

    std::vector<float> take_samples() { return std::move(samples_); }

private:
    LeakageModel model_;
    double sigma_;
    Rng noise_;
    double acc_ = 0.0;
    std::vector<float> samples_;
};

// Offline variant of PowerSink over a stored log. The noise stream is seeded
// directly with cfg.base_seed (batch generation derives per-trace seeds; see
// for_each_trace). The trace label defaults to Fixed; callers relabel.
Trace synthesize_trace(const TransitionLog& log, const LeakageConfig& cfg);

// Runs the fixed-vs-random protocol without materializing anything: for each
// trace index i a per-trace root seed is derived as derive(base_seed, i),
// and from it stream 0 -> class coin (set bit = Fixed), stream 1 -> random-
// class plaintext, stream 2 -> simulator masks, stream 3 -> noise.
// The callback receives traces in index order.
void for_each_trace(
    Design design, uint32_t n_traces, uint64_t fixed_plaintext,
    const Key128& key, const LeakageConfig& cfg,
    const std::function<void(uint32_t index, TraceClass label,
                             std::vector<float>&& samples)>& emit);

struct TraceSet;  // defined in trace_set.hpp

// Materialized protocol run (small n; acceptance-scale runs stream instead).
TraceSet generate_trace_set(Design design, uint32_t n_traces,
                            uint64_t fixed_plaintext, const Key128& key,
                            const LeakageConfig& cfg);

}  // namespace ledti
