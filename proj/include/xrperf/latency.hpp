#ifndef XRPERF_LATENCY_HPP
#define XRPERF_LATENCY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xrperf/errors.hpp"
#include "xrperf/regression.hpp"
#include "xrperf/scenario.hpp"

namespace xrperf {

/// Per-segment latency contributions for one frame, in seconds. Fields hold
/// the gated contribution (a segment switched off by the offload gate or the
/// cooperation flag stores 0), so `total` always equals the plain sum of the
/// eleven segment fields.
struct LatencyBreakdown {
    std::int64_t frame = 1;  ///< q
    double fg = 0.0;
    double vol = 0.0;
    double ext = 0.0;
    double ren = 0.0;
    double fc = 0.0;
    double en = 0.0;
    double loc = 0.0;
    double rem = 0.0;
    double tr = 0.0;
    double ho = 0.0;
    double coop = 0.0;
    double total = 0.0;

    double segment(Segment s) const {
        switch (s) {
            case Segment::FrameGeneration: return fg;
            case Segment::Volumetric: return vol;
            case Segment::ExternalSensors: return ext;
            case Segment::Rendering: return ren;
            case Segment::FrameConversion: return fc;
            case Segment::Encoding: return en;
            case Segment::LocalInference: return loc;
            case Segment::RemoteInference: return rem;
            case Segment::Transmission: return tr;
            case Segment::Handoff: return ho;
            case Segment::Cooperation: return coop;
        }
        return 0.0;
    }

    double sum_of_segments() const {
        return fg + vol + ext + ren + fc + en + loc + rem + tr + ho + coop;
    }
};

/// Frame capture: one frame period plus compute and memory transfer time.
inline double frame_generation(const FrameConfig& frames, double c_client, double m_client) {
    return 1.0 / frames.frame_rate + frames.frame_area / c_client +
           frames.frame_bytes / m_client;
}

/// Inertial/point-cloud extraction for the current scene.
inline double volumetric_generation(const VolumetricConfig& vol, double c_client,
                                    double m_client) {
    return vol.scene_area / c_client + vol.scene_bytes / m_client;
}

/// Slowest sensor's cumulative generation-plus-propagation time over N
/// updates. No sensors means no external wait (empty max = 0).
inline double external_sensor_latency(std::span<const SensorProfile> sensors, int n_updates,
                                      double propagation_speed) {
    double worst = 0.0;
    for (const auto& sensor : sensors) {
        double sum = 0.0;
        for (int n = 1; n <= n_updates; ++n) {
            sum += 1.0 / sensor.gen_frequency + sensor.distance_at(n) / propagation_speed;
        }
        worst = std::max(worst, sum);
    }
    return worst;
}

/// Mean M/M/1 sojourn summed over the given buffer classes.
inline double buffering_delay(std::span<const BufferConfig> buffers) {
    double total = 0.0;
    for (const auto& b : buffers) {
        if (b.service_rate <= b.arrival_rate) {
            throw UnstableQueue("buffer unstable: service rate " +
                                std::to_string(b.service_rate) + " <= arrival rate " +
                                std::to_string(b.arrival_rate));
        }
        total += 1.0 / (b.service_rate - b.arrival_rate);
    }
    return total;
}

inline double buffering_delay(const BufferSet& buffers) {
    const BufferConfig classes[] = {buffers.frame, buffers.volumetric, buffers.external};
    return buffering_delay(std::span<const BufferConfig>(classes, 3));
}

/// Full rendering latency including the result-delivery term selected by the
/// offload gate. The frame composition path accounts delivery separately; this
/// standalone form reports the complete quantity.
inline double rendering_latency(const FrameConfig& frames, double c_client, double m_client,
                                double t_buff, const OffloadPlan& plan, double l_tr_remote) {
    const double delivery = plan.is_local() ? plan.local_result_latency : l_tr_remote;
    return frames.frame_area / c_client + frames.frame_bytes / m_client + t_buff + delivery;
}

/// YUV->RGB conversion, scaling, and cropping ahead of local inference.
inline double frame_conversion(const FrameConfig& frames, double c_client, double m_client) {
    return frames.frame_area / c_client + frames.frame_bytes / m_client;
}

/// H.264 encoding latency. The fitted numerator divided by the allocated
/// resource is in milliseconds; a negative numerator (extrapolation artifact)
/// clamps to zero with a warning. Reading the frame from the input buffer
/// adds the memory term.
inline double encoding_latency(const EncoderConfig& enc, const FrameConfig& frames,
                               double c_client, double m_client,
                               const CoefficientSet& coeffs = paper_coefficients(),
                               WarningList* warnings = nullptr) {
    double raw = encoding_latency_raw(enc, frames, coeffs);
    if (raw < 0.0) {
        add_warning(warnings, "encoding_latency: regression output " + std::to_string(raw) +
                                  " clamped to 0");
        raw = 0.0;
    }
    return (raw / c_client) / units::kMsPerSecond + frames.frame_bytes / m_client;
}

/// On-device inference over the client's share of the task.
inline double local_inference(const FrameConfig& frames, double c_client, double m_client,
                              const CnnProfile& cnn_local, const OffloadPlan& plan,
                              const CoefficientSet& coeffs = paper_coefficients()) {
    const double complexity = cnn_complexity(cnn_local, coeffs);
    return plan.client_share * (frames.converted_area / (c_client * complexity) +
                                frames.converted_bytes / m_client);
}

/// Decode time on hardware with resource c_edge, as a discount of the
/// encoding delay measured on the client.
inline double decoding_latency(double l_en, double c_client, double c_edge, double gamma) {
    return l_en * c_client * gamma / c_edge;
}

/// Edge compute resource: explicit value when configured, otherwise the fixed
/// multiple of the client's allocation.
inline double edge_compute(const EdgeProfile& edge, double c_client) {
    return edge.compute.value_or(kEdgeComputeRatio * c_client);
}

/// Parallel remote inference across the configured edge servers: each share
/// runs decode + inference + memory transfer, and the slowest one gates.
inline double remote_inference(const FrameConfig& frames, std::span<const EdgeProfile> edges,
                               const OffloadPlan& plan, double l_en, double c_client,
                               double gamma,
                               const CoefficientSet& coeffs = paper_coefficients()) {
    if (edges.empty()) {
        throw NoEdgeConfigured("remote inference requested with no edge servers configured");
    }
    double worst = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& edge = edges[e];
        const double share = e < plan.edge_shares.size() ? plan.edge_shares[e] : edge.task_share;
        const double c_edge = edge_compute(edge, c_client);
        const double complexity = cnn_complexity(edge.cnn, coeffs);
        const double l_dec = decoding_latency(l_en, c_client, c_edge, gamma);
        const double per_edge = share * (frames.encoded_area / (c_edge * complexity) +
                                         frames.encoded_bytes / edge.memory_bandwidth + l_dec);
        worst = std::max(worst, per_edge);
    }
    return worst;
}

/// One-way transfer: serialization over the wireless link plus propagation.
inline double transmission_latency(double megabytes, const NetworkProfile& net,
                                   double distance) {
    return units::transfer_seconds(megabytes, net.throughput) +
           distance / net.propagation_speed;
}

/// Expected handoff cost per frame.
inline double handoff_latency(const NetworkProfile& net) {
    return net.handoff_latency * net.handoff_probability;
}

/// Scene/object exchange with cooperating devices.
inline double cooperation_latency(const NetworkProfile& net) {
    return transmission_latency(net.coop_bytes, net, net.coop_distance);
}

/// Distance of the farthest edge server holding a nonzero task share; the
/// parallel round trip is gated by that server.
inline double active_edge_distance(std::span<const EdgeProfile> edges, const OffloadPlan& plan) {
    double worst = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const double share = e < plan.edge_shares.size() ? plan.edge_shares[e] : edges[e].task_share;
        if (share > 0.0) worst = std::max(worst, edges[e].distance);
    }
    return worst;
}

/// Round-trip transfer for remote inference: encoded frame up, result payload
/// down, each serialized over the same link, plus both propagation legs.
inline double round_trip_transmission(const ScenarioSpec& spec) {
    const double d = active_edge_distance(spec.edges, spec.offload);
    return transmission_latency(spec.frames.encoded_bytes, spec.network, d) +
           transmission_latency(spec.offload.result_bytes, spec.network, d);
}

/// Evaluates every pipeline segment for frame q and composes the end-to-end
/// total. Segments on the inactive side of the offload gate are not evaluated
/// and contribute 0, so the result is valid regardless of their configs.
inline LatencyBreakdown compose_frame_latency(const ScenarioSpec& spec, std::int64_t q,
                                              const CoefficientSet& coeffs = paper_coefficients(),
                                              WarningList* warnings = nullptr) {
    LatencyBreakdown out;
    out.frame = q;

    const double c_client = compute_resource(spec.device.allocation, coeffs, warnings);
    const double m_client = spec.device.memory_bandwidth;
    const bool local = spec.offload.is_local();

    out.fg = frame_generation(spec.frames, c_client, m_client);
    out.vol = volumetric_generation(spec.volumetric, c_client, m_client);
    out.ext = external_sensor_latency(spec.sensors, spec.frames.updates_per_frame,
                                      spec.network.propagation_speed);

    // Rendering inside the composition carries the compute and buffering terms
    // plus, when local, the on-device result delivery. Remote result delivery
    // is accounted once, by the transmission segment.
    const double t_buff = buffering_delay(spec.buffer);
    out.ren = spec.frames.frame_area / c_client + spec.frames.frame_bytes / m_client + t_buff +
              (local ? spec.offload.local_result_latency : 0.0);

    if (local) {
        out.fc = frame_conversion(spec.frames, c_client, m_client);
        out.loc = local_inference(spec.frames, c_client, m_client, spec.device.cnn,
                                  spec.offload, coeffs);
    } else {
        out.en = encoding_latency(spec.encoder, spec.frames, c_client, m_client, coeffs,
                                  warnings);
        out.rem = remote_inference(spec.frames, spec.edges, spec.offload, out.en, c_client,
                                   spec.encoder.decode_discount, coeffs);
        out.tr = round_trip_transmission(spec);
        out.ho = handoff_latency(spec.network);
    }
    if (spec.offload.include_coop) {
        out.coop = cooperation_latency(spec.network);
    }

    out.total = out.sum_of_segments();
    return out;
}

} // namespace xrperf

#endif // XRPERF_LATENCY_HPP
