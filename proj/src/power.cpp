#include "power.hpp"

#include <bit>

#include "errors.hpp"
#include "sbox_ti.hpp"
#include "trace_set.hpp"

namespace ledti {

int hamming_weight(uint64_t v) { return std::popcount(v); }

int hamming_distance(uint64_t a, int width_a, uint64_t b, int width_b) {
    if (width_a != width_b)
        throw argument_error("hamming_distance: width mismatch (" +
                             std::to_string(width_a) + " vs " +
                             std::to_string(width_b) + ")");
    if (width_a <= 0 || width_a > 64)
        throw argument_error("hamming_distance: invalid width " +
                             std::to_string(width_a));
    if (width_a < 64) {
        const uint64_t limit = (uint64_t{1} << width_a);
        if (a >= limit || b >= limit)
            throw argument_error(
                "hamming_distance: value exceeds declared width " +
                std::to_string(width_a));
    }
    return std::popcount(a ^ b);
}

namespace {

double transition_leakage(LeakageModel model, const Transition& t, int width) {
    if (model == LeakageModel::HammingDistance)
        return hamming_distance(t.old_value, width, t.new_value, width);
    return hamming_weight(t.new_value);
}

}  // namespace

PowerSink::PowerSink(LeakageModel model, double sigma, uint64_t noise_seed)
    : model_(model), sigma_(sigma), noise_(noise_seed) {
    if (sigma < 0)
        throw argument_error("noise_sigma must be non-negative");
}

void PowerSink::begin_cycle(uint64_t, FsmState) { acc_ = 0.0; }

void PowerSink::record(const Transition& t, int width) {
    acc_ += transition_leakage(model_, t, width);
}

void PowerSink::end_cycle() {
    double s = acc_;
    if (sigma_ > 0) s += sigma_ * noise_.next_gaussian();
    samples_.push_back(static_cast<float>(s));
}

Trace synthesize_trace(const TransitionLog& log, const LeakageConfig& cfg) {
    PowerSink sink(cfg.model, cfg.noise_sigma, cfg.base_seed);
    for (const auto& rec : log.cycles) {
        sink.begin_cycle(0, rec.state);
        for (const auto& t : rec.changes)
            sink.record(t, log.registers[t.reg].width);
        sink.end_cycle();
    }
    Trace tr;
    tr.samples = sink.take_samples();
    return tr;
}

void for_each_trace(
    Design design, uint32_t n_traces, uint64_t fixed_plaintext,
    const Key128& key, const LeakageConfig& cfg,
    const std::function<void(uint32_t, TraceClass, std::vector<float>&&)>&
        emit) {
    if (n_traces < 2)
        throw argument_error("trace generation needs n_traces >= 2, got " +
                             std::to_string(n_traces));
    if (cfg.noise_sigma < 0)
        throw argument_error("noise_sigma must be non-negative");

    Simulator sim(design, builtin_decomposition(), SimConfig{});
    for (uint32_t i = 0; i < n_traces; ++i) {
        const uint64_t root = Rng::derive(cfg.base_seed, i);
        const TraceClass label = Rng(Rng::derive(root, 0)).next_coin()
                                     ? TraceClass::Fixed
                                     : TraceClass::Random;
        const uint64_t pt = (label == TraceClass::Fixed)
                                ? fixed_plaintext
                                : Rng(Rng::derive(root, 1)).next_u64();
        sim.load_inputs(pt, key, Rng(Rng::derive(root, 2)));
        PowerSink sink(cfg.model, cfg.noise_sigma, Rng::derive(root, 3));
        sim.run_to_completion(&sink);
        emit(i, label, sink.take_samples());
    }
}

TraceSet generate_trace_set(Design design, uint32_t n_traces,
                            uint64_t fixed_plaintext, const Key128& key,
                            const LeakageConfig& cfg) {
    TraceSet ts;
    ts.model = cfg.model;
    ts.sigma = cfg.noise_sigma;
    ts.base_seed = cfg.base_seed;
    ts.traces.reserve(n_traces);
    for_each_trace(design, n_traces, fixed_plaintext, key, cfg,
                   [&](uint32_t, TraceClass label,
                       std::vector<float>&& samples) {
                       ts.traces.push_back(Trace{label, std::move(samples)});
                   });
    ts.n_samples = static_cast<uint32_t>(ts.traces.front().samples.size());
    return ts;
}

}  // namespace ledti
