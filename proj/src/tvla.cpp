#include "tvla.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "errors.hpp"
#include "json.hpp"

namespace ledti {

const char* verdict_name(Verdict v) {
    return v == Verdict::Leaks ? "Leaks" : "NoEvidence";
}

void RunningStats::add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
}

void RunningStats::merge(const RunningStats& other) {
    if (other.n == 0) return;
    if (n == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(n);
    const double nb = static_cast<double>(other.n);
    const double delta = other.mean - mean;
    const double total = na + nb;
    mean += delta * nb / total;
    m2 += other.m2 + delta * delta * na * nb / total;
    n += other.n;
}

double RunningStats::variance() const {
    return n < 2 ? 0.0 : m2 / static_cast<double>(n - 1);
}

WelchResult welch_t_from_stats(const RunningStats& fixed,
                               const RunningStats& random) {
    if (fixed.n < 2 || random.n < 2)
        throw argument_error("welch_t needs at least 2 traces per class (got "
                             + std::to_string(fixed.n) + " fixed, " +
                             std::to_string(random.n) + " random)");
    const double num = fixed.mean - random.mean;
    const double denom2 = fixed.variance() / static_cast<double>(fixed.n) +
                          random.variance() / static_cast<double>(random.n);
    WelchResult r;
    if (denom2 > 0) {
        r.t = num / std::sqrt(denom2);
        return r;
    }
    // Both classes constant: identical means carry no evidence; different
    // means are infinitely significant under this test.
    if (num == 0) {
        r.t = 0.0;
        return r;
    }
    r.t = std::copysign(std::numeric_limits<double>::infinity(), num);
    r.degenerate = true;
    return r;
}

WelchResult welch_t(const std::vector<double>& fixed,
                    const std::vector<double>& random) {
    auto two_pass = [](const std::vector<double>& xs) {
        RunningStats s;
        s.n = xs.size();
        if (xs.empty()) return s;
        double sum = 0.0;
        for (double x : xs) sum += x;
        s.mean = sum / static_cast<double>(xs.size());
        double m2 = 0.0;
        for (double x : xs) m2 += (x - s.mean) * (x - s.mean);
        s.m2 = m2;
        return s;
    };
    return welch_t_from_stats(two_pass(fixed), two_pass(random));
}

TvlaAccumulator::TvlaAccumulator(uint32_t n_samples)
    : fixed_(n_samples), random_(n_samples) {
    if (n_samples == 0)
        throw argument_error("TvlaAccumulator needs n_samples >= 1");
}

void TvlaAccumulator::add_trace(TraceClass label,
                                const std::vector<float>& samples) {
    if (samples.size() != fixed_.size())
        throw argument_error("trace length " + std::to_string(samples.size()) +
                             " does not match accumulator width " +
                             std::to_string(fixed_.size()));
    auto& cls = (label == TraceClass::Fixed) ? fixed_ : random_;
    for (size_t i = 0; i < samples.size(); ++i)
        cls[i].add(static_cast<double>(samples[i]));
    (label == TraceClass::Fixed ? n_fixed_ : n_random_) += 1;
}

TvlaReport TvlaAccumulator::report(double threshold) const {
    if (n_fixed_ < 2 || n_random_ < 2)
        throw argument_error(
            "fixed-vs-random test needs >= 2 traces in each class (got " +
            std::to_string(n_fixed_) + " fixed, " + std::to_string(n_random_) +
            " random)");
    TvlaReport rep;
    rep.threshold = threshold;
    rep.n_fixed = n_fixed_;
    rep.n_random = n_random_;
    rep.t_values.resize(fixed_.size());
    for (size_t i = 0; i < fixed_.size(); ++i) {
        const WelchResult w = welch_t_from_stats(fixed_[i], random_[i]);
        rep.t_values[i] = w.t;
        rep.degenerate_warning = rep.degenerate_warning || w.degenerate;
        rep.max_abs_t = std::max(rep.max_abs_t, std::abs(w.t));
    }
    rep.verdict =
        rep.max_abs_t >= threshold ? Verdict::Leaks : Verdict::NoEvidence;
    return rep;
}

TvlaReport tvla_fixed_vs_random(const TraceSet& ts, double threshold) {
    if (ts.traces.empty() || ts.n_samples == 0)
        throw argument_error("empty trace set");
    TvlaAccumulator acc(ts.n_samples);
    for (const auto& t : ts.traces) acc.add_trace(t.label, t.samples);
    if (acc.n_fixed() == 0 || acc.n_random() == 0)
        throw argument_error("trace set holds a single class; the test needs "
                             "both fixed and random traces");
    return acc.report(threshold);
}

void write_tvla_json(const TvlaReport& report, const std::string& path) {
    nlohmann::json j;
    j["max_abs_t"] = report.max_abs_t;
    j["threshold"] = report.threshold;
    j["verdict"] = verdict_name(report.verdict);
    j["n_fixed"] = report.n_fixed;
    j["n_random"] = report.n_random;
    j["degenerate_warning"] = report.degenerate_warning;
    // JSON has no infinity; the sentinel serializes as a string.
    nlohmann::json tv = nlohmann::json::array();
    for (double t : report.t_values) {
        if (std::isinf(t))
            tv.push_back(t > 0 ? "inf" : "-inf");
        else
            tv.push_back(t);
    }
    j["t_values"] = std::move(tv);
    std::ofstream out(path);
    if (!out) throw io_error("cannot write report: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw io_error("failed writing report: " + path);
}

void write_tvla_csv(const TvlaReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write report: " + path);
    out << "sample_index,t\n";
    out.precision(17);
    for (size_t i = 0; i < report.t_values.size(); ++i)
        out << i << ',' << report.t_values[i] << '\n';
    if (!out) throw io_error("failed writing report: " + path);
}

}  // namespace ledti
