#include "trace_set.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "errors.hpp"

namespace ledti {

namespace {

constexpr char MAGIC[4] = {'L', 'E', 'D', 'T'};

void put_bytes(std::ostream& out, const void* p, size_t n) {
    out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

void put_u32(std::ostream& out, uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    put_bytes(out, b, 4);
}

void put_u64(std::ostream& out, uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    put_bytes(out, b, 8);
}

void put_f64(std::ostream& out, double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(out, bits);
}

void put_f32(std::ostream& out, float v) {
    uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32(out, bits);
}

// Reader that tracks the field being parsed so every failure names it.
class Reader {
public:
    Reader(std::istream& in, std::string path)
        : in_(in), path_(std::move(path)) {}

    void bytes(void* p, size_t n, const std::string& field) {
        in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
        if (static_cast<size_t>(in_.gcount()) != n)
            throw format_error("trace set " + path_ +
                               ": truncated while reading " + field);
    }

    uint32_t u32(const std::string& field) {
        unsigned char b[4];
        bytes(b, 4, field);
        uint32_t v = 0;
        for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
        return v;
    }

    uint64_t u64(const std::string& field) {
        unsigned char b[8];
        bytes(b, 8, field);
        uint64_t v = 0;
        for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
        return v;
    }

    double f64(const std::string& field) {
        uint64_t bits = u64(field);
        double v;
        std::memcpy(&v, &bits, 8);
        return v;
    }

    float f32(const std::string& field) {
        uint32_t bits = u32(field);
        float v;
        std::memcpy(&v, &bits, 4);
        return v;
    }

    uint8_t u8(const std::string& field) {
        unsigned char b;
        bytes(&b, 1, field);
        return b;
    }

    bool at_eof() { return in_.peek() == std::char_traits<char>::eof(); }

private:
    std::istream& in_;
    std::string path_;
};

}  // namespace

void write_trace_set(const TraceSet& ts, const std::string& path) {
    if (ts.traces.empty())
        throw argument_error("refusing to write a trace set with n_traces=0");
    for (const auto& t : ts.traces)
        if (t.samples.size() != ts.n_samples)
            throw argument_error(
                "trace length " + std::to_string(t.samples.size()) +
                " disagrees with n_samples " + std::to_string(ts.n_samples));

    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write trace set: " + path);
    put_bytes(out, MAGIC, 4);
    put_u32(out, TRACE_SET_VERSION);
    put_u32(out, static_cast<uint32_t>(ts.traces.size()));
    put_u32(out, ts.n_samples);
    uint8_t model = static_cast<uint8_t>(ts.model);
    put_bytes(out, &model, 1);
    put_f64(out, ts.sigma);
    put_u64(out, ts.base_seed);
    for (const auto& t : ts.traces) {
        uint8_t label = static_cast<uint8_t>(t.label);
        put_bytes(out, &label, 1);
        for (float s : t.samples) put_f32(out, s);
    }
    if (!out) throw io_error("failed writing trace set: " + path);
}

TraceSet read_trace_set(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open trace set: " + path);
    Reader r(in, path);

    char magic[4];
    r.bytes(magic, 4, "magic");
    if (std::memcmp(magic, MAGIC, 4) != 0)
        throw format_error("trace set " + path +
                           ": magic: expected \"LEDT\"");
    const uint32_t version = r.u32("version");
    if (version != TRACE_SET_VERSION)
        throw format_error("trace set " + path + ": version: unsupported " +
                           std::to_string(version) + " (expected " +
                           std::to_string(TRACE_SET_VERSION) + ")");
    const uint32_t n_traces = r.u32("n_traces");
    if (n_traces == 0)
        throw format_error("trace set " + path +
                           ": n_traces: must be nonzero");
    const uint32_t n_samples = r.u32("n_samples");
    if (n_samples == 0)
        throw format_error("trace set " + path +
                           ": n_samples: must be nonzero");
    const uint8_t model = r.u8("model");
    if (model > 1)
        throw format_error("trace set " + path + ": model: unknown tag " +
                           std::to_string(model));

    TraceSet ts;
    ts.model = static_cast<LeakageModel>(model);
    ts.sigma = r.f64("sigma");
    ts.base_seed = r.u64("base_seed");
    ts.n_samples = n_samples;
    ts.traces.resize(n_traces);
    for (uint32_t i = 0; i < n_traces; ++i) {
        const std::string where = "trace " + std::to_string(i);
        const uint8_t label = r.u8(where + " label");
        if (label > 1)
            throw format_error("trace set " + path + ": " + where +
                               " label: unknown class " +
                               std::to_string(label));
        Trace& t = ts.traces[i];
        t.label = static_cast<TraceClass>(label);
        t.samples.resize(n_samples);
        for (uint32_t s = 0; s < n_samples; ++s)
            t.samples[s] = r.f32(where + " samples");
    }
    if (!r.at_eof())
        throw format_error("trace set " + path +
                           ": payload: trailing bytes after declared traces");
    return ts;
}

}  // namespace ledti
