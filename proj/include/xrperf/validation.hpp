#ifndef XRPERF_VALIDATION_HPP
#define XRPERF_VALIDATION_HPP

#include <string>
#include <vector>

#include "xrperf/regression.hpp"
#include "xrperf/scenario.hpp"

namespace xrperf {

enum class Severity { Warning, Error };

struct Violation {
    Severity severity = Severity::Error;
    std::string field;
    std::string message;
};

/// Ordered findings from validate_scenario. Errors block evaluation;
/// warnings do not.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const {
        for (const auto& v : violations) {
            if (v.severity == Severity::Error) return false;
        }
        return true;
    }
    int error_count() const {
        int n = 0;
        for (const auto& v : violations) n += v.severity == Severity::Error;
        return n;
    }
    int warning_count() const {
        int n = 0;
        for (const auto& v : violations) n += v.severity == Severity::Warning;
        return n;
    }
};

namespace detail {

struct Checker {
    ValidationReport& report;

    void error(const std::string& field, const std::string& msg) {
        report.violations.push_back({Severity::Error, field, msg});
    }
    void warn(const std::string& field, const std::string& msg) {
        report.violations.push_back({Severity::Warning, field, msg});
    }
    void require(bool cond, const std::string& field, const std::string& msg) {
        if (!cond) error(field, msg);
    }

    void check_cnn(const CnnProfile& cnn, const std::string& field) {
        require(cnn.depth >= 0.0, field + ".depth", "depth must be >= 0");
        require(cnn.size_mb > 0.0, field + ".size_mb", "size must be > 0");
        require(cnn.depth_scale >= 0.0, field + ".depth_scale", "depth_scale must be >= 0");
        if (cnn.depth > 0.0 && cnn.depth_scale > 0.0) {
            error(field, "depth and depth_scale are alternative descriptors; set only one");
        }
    }

    void check_buffer(const BufferConfig& b, const std::string& field) {
        require(b.arrival_rate > 0.0, field + ".arrival_rate", "arrival rate must be > 0");
        if (b.service_rate <= b.arrival_rate) {
            error(field, "unstable queue: service rate must exceed arrival rate");
        }
    }
};

} // namespace detail

/// Checks every structural and physical constraint of the scenario plus the
/// regression-domain warnings. Total: never throws, always returns the full
/// ordered report. A scenario with zero errors is accepted by every
/// evaluation operation without raising a precondition error.
inline ValidationReport validate_scenario(const ScenarioSpec& spec,
                                          const CoefficientSet& coeffs = paper_coefficients()) {
    ValidationReport report;
    detail::Checker c{report};

    // Frames / workload.
    const auto& fr = spec.frames;
    c.require(fr.frame_rate > 0.0, "frames.frame_rate", "frame rate must be > 0");
    c.require(fr.frame_count >= 1, "frames.frame_count", "frame count must be >= 1");
    c.require(fr.frame_area > 0.0, "frames.frame_area", "frame area must be > 0");
    c.require(fr.frame_bytes > 0.0, "frames.frame_bytes", "frame bytes must be > 0");
    c.require(fr.converted_area > 0.0, "frames.converted_area", "converted area must be > 0");
    c.require(fr.converted_bytes > 0.0, "frames.converted_bytes", "converted bytes must be > 0");
    c.require(fr.encoded_area > 0.0, "frames.encoded_area", "encoded area must be > 0");
    c.require(fr.encoded_bytes > 0.0, "encoder.output_bytes", "encoded bytes must be > 0");
    c.require(fr.updates_per_frame >= 1, "frames.updates_per_frame",
              "updates per frame must be >= 1");
    if (fr.encoded_bytes > fr.frame_bytes) {
        c.error("encoder.output_bytes", "encoding must not grow the payload (delta_f3 > delta_f1)");
    }

    // Device.
    const auto& alloc = spec.device.allocation;
    if (alloc.cpu_share < 0.0 || alloc.cpu_share > 1.0) {
        c.error("device.allocation.cpu_share", "cpu_share out of [0,1]");
    }
    c.require(alloc.cpu_clock > 0.0, "device.allocation.cpu_clock", "cpu clock must be > 0");
    c.require(alloc.gpu_clock > 0.0, "device.allocation.gpu_clock", "gpu clock must be > 0");
    c.require(spec.device.memory_bandwidth > 0.0, "device.memory_bandwidth",
              "memory bandwidth must be > 0");
    c.require(spec.device.wait_power >= 0.0, "power.wait_power", "wait power must be >= 0");
    c.require(spec.device.base_power >= 0.0, "power.base_power", "base power must be >= 0");
    if (spec.device.thermal_fraction < 0.0 || spec.device.thermal_fraction >= 1.0) {
        c.error("power.thermal_fraction", "thermal fraction out of [0,1)");
    }
    c.check_cnn(spec.device.cnn, "device.cnn");

    // Edges.
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
        const auto& edge = spec.edges[e];
        const std::string field = "edges." + std::to_string(e);
        if (edge.compute && *edge.compute <= 0.0) {
            c.error(field + ".compute", "edge compute must be > 0 when given");
        }
        c.require(edge.memory_bandwidth > 0.0, field + ".memory_bandwidth",
                  "memory bandwidth must be > 0");
        if (edge.task_share < 0.0 || edge.task_share > 1.0) {
            c.error(field + ".task_share", "task share out of [0,1]");
        }
        c.require(edge.distance >= 0.0, field + ".distance", "distance must be >= 0");
        c.check_cnn(edge.cnn, field + ".cnn");
    }

    // Network.
    const auto& net = spec.network;
    c.require(net.throughput > 0.0, "network.throughput", "throughput must be > 0");
    c.require(net.propagation_speed > 0.0, "network.propagation_speed",
              "propagation speed must be > 0");
    if (net.handoff_probability < 0.0 || net.handoff_probability > 1.0) {
        c.error("network.handoff_probability", "handoff probability out of [0,1]");
    }
    c.require(net.handoff_latency >= 0.0, "network.handoff_latency",
              "handoff latency must be >= 0");
    c.require(net.coop_distance >= 0.0, "network.coop_distance", "coop distance must be >= 0");
    c.require(net.coop_bytes >= 0.0, "network.coop_bytes", "coop bytes must be >= 0");

    // Sensors.
    for (std::size_t m = 0; m < spec.sensors.size(); ++m) {
        const auto& sensor = spec.sensors[m];
        const std::string field = "sensors." + std::to_string(m);
        c.require(sensor.gen_frequency > 0.0, field + ".gen_frequency",
                  "generation frequency must be > 0");
        c.require(sensor.distance >= 0.0, field + ".distance", "distance must be >= 0");
        for (double d : sensor.distance_series) {
            if (d < 0.0) {
                c.error(field + ".distance_series", "distances must be >= 0");
                break;
            }
        }
        c.require(sensor.packet_arrival_rate >= 0.0, field + ".packet_arrival_rate",
                  "arrival-rate contribution must be >= 0");
        if (!sensor.distance_series.empty() &&
            sensor.distance_series.size() < static_cast<std::size_t>(fr.updates_per_frame)) {
            c.warn(field + ".distance_series",
                   "series shorter than updates per frame; last entry is held");
        }
    }

    // Encoder.
    const auto& enc = spec.encoder;
    c.require(enc.i_interval >= 0.0, "encoder.i_interval", "must be >= 0");
    c.require(enc.b_interval >= 0.0, "encoder.b_interval", "must be >= 0");
    c.require(enc.bitrate >= 0.0, "encoder.bitrate", "must be >= 0");
    c.require(enc.quantization >= 0.0, "encoder.quantization", "must be >= 0");
    c.require(enc.unit_scale >= 0.0, "encoder.unit_scale", "must be >= 0");
    c.require(enc.decode_discount >= 0.0, "encoder.decode_discount", "must be >= 0");

    // Volumetric scene.
    c.require(spec.volumetric.scene_area > 0.0, "volumetric.scene_area", "must be > 0");
    c.require(spec.volumetric.scene_bytes > 0.0, "volumetric.scene_bytes", "must be > 0");

    // Buffers.
    c.check_buffer(spec.buffer.frame, "buffer.frame");
    c.check_buffer(spec.buffer.volumetric, "buffer.volumetric");
    c.check_buffer(spec.buffer.external, "buffer.external");

    // Offload plan.
    const auto& plan = spec.offload;
    if (plan.local_flag != 0 && plan.local_flag != 1) {
        c.error("offload.local", "local flag must be 0 or 1");
    }
    if (plan.client_share < 0.0 || plan.client_share > 1.0) {
        c.error("offload.client_share", "client share out of [0,1]");
    }
    c.require(plan.local_result_latency >= 0.0, "offload.local_result_latency",
              "must be >= 0");
    c.require(plan.result_bytes >= 0.0, "offload.result_bytes", "must be >= 0");
    if (plan.edge_shares.size() != spec.edges.size()) {
        c.error("offload.edge_shares", "one share per configured edge server required");
    } else {
        double share_sum = plan.client_share;
        for (double s : plan.edge_shares) share_sum += s;
        if (std::abs(share_sum - plan.task_total) > 1e-9) {
            c.error("offload", "client and edge shares must sum to the total task (" +
                                   std::to_string(share_sum) + " != " +
                                   std::to_string(plan.task_total) + ")");
        }
    }
    if (!plan.is_local() && spec.edges.empty()) {
        c.error("offload", "remote plan has no edge servers configured");
    }

    // Power overrides.
    for (int i = 0; i < kSegmentCount; ++i) {
        const auto w = spec.power_overrides.watts[i];
        if (w && *w < 0.0) {
            c.error(std::string("power.overrides.") + segment_name(static_cast<Segment>(i)),
                    "override must be >= 0");
        }
    }

    // Regression-domain warnings (clamping regions of the fitted models).
    if (alloc.cpu_clock > 0.0 && alloc.gpu_clock > 0.0 && alloc.cpu_share >= 0.0 &&
        alloc.cpu_share <= 1.0) {
        const double fg = alloc.gpu_clock;
        const double gpu_branch = coeffs.compute_gpu.evaluate({fg * fg, fg});
        if (alloc.cpu_share < 1.0 && gpu_branch <= 0.0) {
            c.warn("device.allocation.gpu_clock",
                   "gpu compute regression near non-positive region");
        }
        WarningList clamp;
        if (compute_resource(alloc, coeffs, &clamp); !clamp.empty()) {
            c.warn("device.allocation", "allocated compute clamps to floor at these clocks");
        }
        clamp.clear();
        if (mean_power(alloc, spec.device.base_power, coeffs, &clamp); !clamp.empty()) {
            c.warn("device.allocation", "mean power regression negative; clamps to base power");
        }
        if (!plan.is_local() && encoding_latency_raw(enc, fr, coeffs) < 0.0) {
            c.warn("encoder", "encoding regression negative at this configuration; clamps to 0");
        }
    }

    return report;
}

} // namespace xrperf

#endif // XRPERF_VALIDATION_HPP
