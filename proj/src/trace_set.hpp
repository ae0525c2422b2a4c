#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "power.hpp"

namespace ledti {

// On-disk layout (all integers little-endian):
//   magic "LEDT" | version u32 | n_traces u32 | n_samples u32 |
//   model u8 | sigma f64 | base_seed u64 |
//   then per trace: label u8 | n_samples * f32
struct TraceSet {
    LeakageModel model = LeakageModel::HammingDistance;
    double sigma = 0.0;
    uint64_t base_seed = 0;
    uint32_t n_samples = 0;
    std::vector<Trace> traces;
};

inline constexpr uint32_t TRACE_SET_VERSION = 1;

void write_trace_set(const TraceSet& ts, const std::string& path);
TraceSet read_trace_set(const std::string& path);

}  // namespace ledti
