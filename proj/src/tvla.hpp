#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trace_set.hpp"

namespace ledti {

inline constexpr double TVLA_THRESHOLD = 4.5;

enum class Verdict : uint8_t {
    NoEvidence = 0,
    Leaks = 1,
};

const char* verdict_name(Verdict v);

// Streaming mean/variance accumulator (Welford) with exact merge, so chunked
// or threaded accumulation reproduces the sequential result bit-for-bit only
// when the merge order is fixed; everything here merges in index order.
struct RunningStats {
    uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x);
    void merge(const RunningStats& other);
    double variance() const;  // n-1 divisor; 0 when n < 2
};

// Welch's t with the degenerate-variance convention: when both classes are
// constant, equal means give t = 0 and unequal means give an infinite
// sentinel (sign of the mean difference) plus the warning flag.
struct WelchResult {
    double t = 0.0;
    bool degenerate = false;
};

WelchResult welch_t_from_stats(const RunningStats& fixed,
                               const RunningStats& random);

// Two-pass reference implementation over raw series (the oracle the
// streaming path is tested against). Requires >= 2 samples per class.
WelchResult welch_t(const std::vector<double>& fixed,
                    const std::vector<double>& random);

struct TvlaReport {
    std::vector<double> t_values;
    double max_abs_t = 0.0;
    double threshold = TVLA_THRESHOLD;
    Verdict verdict = Verdict::NoEvidence;
    uint64_t n_fixed = 0;
    uint64_t n_random = 0;
    bool degenerate_warning = false;  // some sample hit the infinite sentinel
};

// Per-sample Welch accumulation for one fixed-vs-random comparison without
// holding traces in memory. Trace length is fixed at construction.
class TvlaAccumulator {
public:
    explicit TvlaAccumulator(uint32_t n_samples);

    void add_trace(TraceClass label, const std::vector<float>& samples);
    TvlaReport report(double threshold = TVLA_THRESHOLD) const;

    uint64_t n_fixed() const { return n_fixed_; }
    uint64_t n_random() const { return n_random_; }

private:
    std::vector<RunningStats> fixed_;
    std::vector<RunningStats> random_;
    uint64_t n_fixed_ = 0;
    uint64_t n_random_ = 0;
};

// Fixed-vs-random Welch t-test over a materialized set. Throws Argument
// error when either class is missing or has fewer than two traces.
TvlaReport tvla_fixed_vs_random(const TraceSet& ts,
                                double threshold = TVLA_THRESHOLD);

// Report export: JSON object with the full t_values array, and a
// `sample_index,t` CSV for plotting.
void write_tvla_json(const TvlaReport& report, const std::string& path);
void write_tvla_csv(const TvlaReport& report, const std::string& path);

}  // namespace ledti
