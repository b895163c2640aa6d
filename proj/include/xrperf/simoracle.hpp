#ifndef XRPERF_SIMORACLE_HPP
#define XRPERF_SIMORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "xrperf/aoi.hpp"
#include "xrperf/scenario.hpp"

namespace xrperf {

/// SplitMix64: 64-bit deterministic generator (Steele, Lea & Flood). Chosen
/// for exact reproducibility across platforms; the standard distributions are
/// avoided because their output sequences are implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Exponential variate via inverse CDF; safe at u = 0.
    double exponential(double rate) { return -std::log1p(-next_double()) / rate; }

private:
    std::uint64_t state_;
};

/// Independent substream for (base seed, stream index). Adding a stream never
/// perturbs the draws of existing ones.
inline SplitMix64 split_stream(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 mixer(seed ^ (0xA0761D6478BD642FULL * (stream + 1)));
    return SplitMix64(mixer.next());
}

/// Event kinds in tie-break order: simultaneous events sort request first,
/// then generate, arrive, service start, service end.
enum class EventKind : int {
    Request = 0,
    Generate = 1,
    Arrive = 2,
    ServiceStart = 3,
    ServiceEnd = 4,
};

inline const char* event_kind_name(EventKind k) {
    switch (k) {
        case EventKind::Request: return "request";
        case EventKind::Generate: return "generate";
        case EventKind::Arrive: return "arrive";
        case EventKind::ServiceStart: return "service_start";
        case EventKind::ServiceEnd: return "service_end";
    }
    return "?";
}

struct Event {
    double time = 0.0;
    EventKind kind = EventKind::Generate;
    int stream = 0;          ///< sensor index, or -1 for device-side requests
    std::int64_t index = 0;  ///< packet / customer / request number (1-based)
};

/// Deterministic event log: identical (config, seed) yields identical events.
struct EventTimeline {
    std::uint64_t seed = 0;
    double horizon = 0.0;
    std::vector<Event> events;

    void add(double time, EventKind kind, int stream, std::int64_t index) {
        events.push_back({time, kind, stream, index});
    }

    /// Orders by time, breaking ties by kind order, then stream, then index.
    void finalize() {
        std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
            return std::tie(a.time, a.kind, a.stream, a.index) <
                   std::tie(b.time, b.kind, b.stream, b.index);
        });
        horizon = events.empty() ? 0.0 : events.back().time;
    }
};

struct Mm1Stats {
    double mean_sojourn = 0.0;       ///< mean time in system, s
    double utilization = 0.0;        ///< server busy fraction over the run
    std::int64_t sample_count = 0;   ///< customers included in the mean
};

/// Single FIFO server fed by Poisson arrivals with exponential service.
/// Unstable inputs are allowed; the mean then grows with the horizon and is
/// reported as-is. No warm-up truncation by default (bias is within the
/// oracle tolerance at large customer counts); `warmup` drops the first
/// customers from the mean when requested.
inline Mm1Stats simulate_mm1(double lambda, double mu, std::int64_t customers,
                             std::uint64_t seed, std::int64_t warmup = 0,
                             EventTimeline* log = nullptr) {
    SplitMix64 arrivals = split_stream(seed, 0);
    SplitMix64 services = split_stream(seed, 1);
    if (log) log->seed = seed;

    double arrival_time = 0.0;
    double server_free_at = 0.0;
    double sojourn_sum = 0.0;
    double busy_time = 0.0;
    double last_end = 0.0;
    std::int64_t counted = 0;

    for (std::int64_t i = 1; i <= customers; ++i) {
        arrival_time += arrivals.exponential(lambda);
        const double start = std::max(arrival_time, server_free_at);
        const double service = services.exponential(mu);
        const double end = start + service;
        server_free_at = end;
        last_end = end;
        busy_time += service;
        if (i > warmup) {
            sojourn_sum += end - arrival_time;
            ++counted;
        }
        if (log) {
            log->add(arrival_time, EventKind::Arrive, 0, i);
            log->add(start, EventKind::ServiceStart, 0, i);
            log->add(end, EventKind::ServiceEnd, 0, i);
        }
    }
    if (log) log->finalize();

    Mm1Stats stats;
    stats.sample_count = counted;
    stats.mean_sojourn = counted > 0 ? sojourn_sum / static_cast<double>(counted) : 0.0;
    stats.utilization = last_end > 0.0 ? busy_time / last_end : 0.0;
    return stats;
}

/// How a request is matched to sensor packets.
enum class AoiPolicy {
    PaperMapping,       ///< the n-th generated packet serves the n-th request
    FreshestAvailable,  ///< each request reads the newest packet delivered so far
};

enum class SojournMode {
    Fixed,       ///< every packet spends exactly the analytic mean in the buffer
    Stochastic,  ///< per-packet exponential sojourn at rate (mu - lambda)
};

/// Replays the sensor/request timeline: generation ticks at n/f_t, wireless
/// propagation, buffering, and request ticks at n/f_req. Returns the measured
/// age per request for each sensor. In fixed mode with the paper mapping this
/// reproduces the analytic samples; each sensor draws from its own RNG
/// substream.
inline std::vector<std::vector<double>> simulate_aoi(
    std::span<const SensorProfile> sensors, double f_req, int n_updates,
    const BufferConfig& buffer, double propagation_speed, std::uint64_t seed,
    AoiPolicy policy = AoiPolicy::PaperMapping, SojournMode mode = SojournMode::Fixed,
    EventTimeline* log = nullptr) {
    const double sojourn_rate = buffer.service_rate - buffer.arrival_rate;
    const double fixed_sojourn = mean_sojourn(buffer);
    if (log) log->seed = seed;

    std::vector<double> request_times;
    request_times.reserve(static_cast<std::size_t>(n_updates));
    for (int n = 1; n <= n_updates; ++n) {
        request_times.push_back(n / f_req);
        if (log) log->add(request_times.back(), EventKind::Request, -1, n);
    }

    std::vector<std::vector<double>> all_samples;
    all_samples.reserve(sensors.size());

    for (std::size_t m = 0; m < sensors.size(); ++m) {
        const auto& sensor = sensors[m];
        SplitMix64 rng = split_stream(seed, m);
        const double transit = sensor.frame_distance() / propagation_speed;

        // Packets generated within the request window (paper mapping needs
        // exactly N; the freshest policy may consume more from fast sensors).
        std::int64_t packet_count = n_updates;
        if (policy == AoiPolicy::FreshestAvailable) {
            packet_count = std::max<std::int64_t>(
                n_updates,
                static_cast<std::int64_t>(std::floor(request_times.back() *
                                                     sensor.gen_frequency + 1e-9)));
        }

        std::vector<double> generated(static_cast<std::size_t>(packet_count));
        std::vector<double> delivered(static_cast<std::size_t>(packet_count));
        for (std::int64_t n = 1; n <= packet_count; ++n) {
            const double gen = n / sensor.gen_frequency;
            const double arrive = gen + transit;
            const double wait =
                mode == SojournMode::Fixed ? fixed_sojourn : rng.exponential(sojourn_rate);
            const double end = arrive + wait;
            generated[static_cast<std::size_t>(n - 1)] = gen;
            delivered[static_cast<std::size_t>(n - 1)] = end;
            if (log) {
                log->add(gen, EventKind::Generate, static_cast<int>(m), n);
                log->add(arrive, EventKind::Arrive, static_cast<int>(m), n);
                log->add(end, EventKind::ServiceEnd, static_cast<int>(m), n);
            }
        }

        std::vector<double> samples;
        samples.reserve(static_cast<std::size_t>(n_updates));
        for (int n = 1; n <= n_updates; ++n) {
            const double req = request_times[static_cast<std::size_t>(n - 1)];
            if (policy == AoiPolicy::PaperMapping) {
                samples.push_back(delivered[static_cast<std::size_t>(n - 1)] - req);
            } else {
                // Age of the newest packet delivered by the request instant;
                // with nothing delivered yet the device has only the t=0 state.
                double newest_gen = 0.0;
                for (std::int64_t k = 0; k < packet_count; ++k) {
                    if (delivered[static_cast<std::size_t>(k)] <= req) {
                        newest_gen = std::max(newest_gen, generated[static_cast<std::size_t>(k)]);
                    }
                }
                samples.push_back(req - newest_gen);
            }
        }
        all_samples.push_back(std::move(samples));
    }
    if (log) log->finalize();
    return all_samples;
}

} // namespace xrperf

#endif // XRPERF_SIMORACLE_HPP
