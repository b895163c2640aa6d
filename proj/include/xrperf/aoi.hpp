#ifndef XRPERF_AOI_HPP
#define XRPERF_AOI_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "xrperf/errors.hpp"
#include "xrperf/scenario.hpp"

namespace xrperf {

/// Mean time an information packet spends in a stable M/M/1 buffer.
inline double mean_sojourn(const BufferConfig& buffer) {
    if (buffer.service_rate <= buffer.arrival_rate) {
        throw UnstableQueue("sojourn undefined: service rate " +
                            std::to_string(buffer.service_rate) + " <= arrival rate " +
                            std::to_string(buffer.arrival_rate));
    }
    return 1.0 / (buffer.service_rate - buffer.arrival_rate);
}

/// Age samples for one sensor over N update cycles: the n-th generated packet
/// serves the n-th request, so the age is generation time plus propagation and
/// buffering, minus the request time. Values may be negative when the sensor
/// outpaces the requests; reporting layers clamp them with a flag.
inline std::vector<double> aoi_samples(const SensorProfile& sensor, int n_updates, double f_req,
                                       double mean_sojourn_s, double propagation_speed) {
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(n_updates));
    const double transit = sensor.frame_distance() / propagation_speed + mean_sojourn_s;
    for (int n = 1; n <= n_updates; ++n) {
        const double generated = n / sensor.gen_frequency;
        const double requested = n / f_req;
        samples.push_back(generated + transit - requested);
    }
    return samples;
}

/// Arithmetic mean age over the update cycles of one frame.
inline double average_aoi(const std::vector<double>& samples) {
    if (samples.empty()) throw EmptyUpdates("average AoI undefined over zero updates");
    return std::accumulate(samples.begin(), samples.end(), 0.0) /
           static_cast<double>(samples.size());
}

struct RoiResult {
    double processed_frequency = 0.0;  ///< f_bar_t = 1/A, Hz
    double required_frequency = 0.0;   ///< f_req = N/L_tot, Hz
    double roi = 0.0;                  ///< f_bar_t / f_req; >= 1 means fresh
    bool fresh = false;
};

/// Relevance-of-Information: achieved vs required information frequency.
inline RoiResult roi(double average_aoi_s, int n_updates, double total_latency_s) {
    if (average_aoi_s <= 0.0) {
        throw DegenerateAoi("RoI undefined for non-positive average AoI " +
                            std::to_string(average_aoi_s));
    }
    RoiResult r;
    r.processed_frequency = 1.0 / average_aoi_s;
    r.required_frequency = static_cast<double>(n_updates) / total_latency_s;
    r.roi = r.processed_frequency / r.required_frequency;
    r.fresh = r.roi >= 1.0;
    return r;
}

/// Per-sensor AoI results for one frame. Raw samples are preserved; the
/// clamped view (age floored at 0) is what reports print, with a flag marking
/// each clamped entry.
struct SensorAoi {
    std::string sensor_id;
    std::vector<double> samples;        ///< raw t^{mn}, s
    std::vector<bool> clamped;          ///< true where the raw sample was negative
    double average = 0.0;               ///< A^m, mean of raw samples, s
    double processed_frequency = 0.0;   ///< f_bar_t, Hz (NaN when degenerate)
    double roi = 0.0;                   ///< NaN when degenerate
    bool fresh = false;
    bool degenerate = false;            ///< average <= 0, RoI flagged non-finite

    double clamped_sample(std::size_t i) const { return samples[i] < 0.0 ? 0.0 : samples[i]; }
};

struct AoiReport {
    std::int64_t frame = 1;
    int n_updates = 0;
    double required_frequency = 0.0;  ///< f_req, Hz
    std::vector<SensorAoi> sensors;
};

/// Builds the per-sensor AoI report for frame q. The required frequency
/// follows the frame workload: N updates over the frame's end-to-end latency.
/// Sensor packets share the external buffer class (equal packet lengths).
inline AoiReport build_aoi_report(const ScenarioSpec& spec, std::int64_t frame,
                                  double total_latency_s) {
    AoiReport report;
    report.frame = frame;
    report.n_updates = spec.frames.updates_per_frame;
    report.required_frequency = static_cast<double>(report.n_updates) / total_latency_s;
    if (spec.sensors.empty()) return report;

    const double sojourn = mean_sojourn(spec.buffer.external);
    for (std::size_t m = 0; m < spec.sensors.size(); ++m) {
        const auto& sensor = spec.sensors[m];
        SensorAoi entry;
        entry.sensor_id = sensor.id.empty() ? "sensor" + std::to_string(m) : sensor.id;
        entry.samples = aoi_samples(sensor, report.n_updates, report.required_frequency,
                                    sojourn, spec.network.propagation_speed);
        entry.clamped.reserve(entry.samples.size());
        for (double s : entry.samples) entry.clamped.push_back(s < 0.0);
        entry.average = average_aoi(entry.samples);
        if (entry.average > 0.0) {
            const RoiResult r = roi(entry.average, report.n_updates, total_latency_s);
            entry.processed_frequency = r.processed_frequency;
            entry.roi = r.roi;
            entry.fresh = r.fresh;
        } else {
            entry.degenerate = true;
            entry.processed_frequency = std::numeric_limits<double>::quiet_NaN();
            entry.roi = std::numeric_limits<double>::quiet_NaN();
        }
        report.sensors.push_back(std::move(entry));
    }
    return report;
}

} // namespace xrperf

#endif // XRPERF_AOI_HPP
