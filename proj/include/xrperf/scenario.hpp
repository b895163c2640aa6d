#ifndef XRPERF_SCENARIO_HPP
#define XRPERF_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xrperf {

// Unit conventions used throughout the library:
//   frame/scene areas      Mpixel (10^6 pixels)
//   data sizes             MB (10^6 bytes); 1 MB = 8 Mb for transfer math
//   memory bandwidth       MB/s
//   network throughput     Mbps (10^6 bits/s)
//   compute resource       model compute units (as emitted by the fitted
//                          allocation regression; the unit is not named)
//   power                  W, energy J internally (reported in mJ)
//   latency                seconds internally (reported in ms)
namespace units {
inline constexpr double kMbitPerMB = 8.0;       // 1 MB = 8 Mb
inline constexpr double kMsPerSecond = 1000.0;
inline constexpr double kDefaultPropagationSpeed = 3.0e8; // m/s

/// Serialization time in seconds for `megabytes` over a link of `mbps`.
inline double transfer_seconds(double megabytes, double mbps) {
    return megabytes * kMbitPerMB / mbps;
}
} // namespace units

/// Per-frame workload description.
struct FrameConfig {
    double frame_rate = 30.0;      ///< n_fps, frames/s
    double frame_area = 2.0;       ///< s_f1, Mpixel
    double frame_bytes = 3.0;      ///< delta_f1, MB
    double converted_area = 1.0;   ///< s_f2, Mpixel
    double converted_bytes = 1.5;  ///< delta_f2, MB
    double encoded_area = 2.0;     ///< s_f3, Mpixel (decoded resolution at the edge)
    double encoded_bytes = 1.0;    ///< delta_f3, MB (mirrors EncoderConfig::output_bytes)
    std::int64_t frame_count = 1;  ///< Q_n
    int updates_per_frame = 1;     ///< N, external information updates per frame
};

/// Processor clocks plus the CPU/GPU utilization split. GPU share is 1 - cpu_share.
struct ComputeAllocation {
    double cpu_clock = 2.0;  ///< f_c, GHz
    double gpu_clock = 1.0;  ///< f_g, GHz
    double cpu_share = 1.0;  ///< omega_c in [0,1]

    double gpu_share() const { return 1.0 - cpu_share; }
};

/// Depth/size descriptor of a CNN. For depth-scaled networks, depth_scale
/// replaces the layer count (at most one of the two is positive).
struct CnnProfile {
    double depth = 0.0;        ///< d_CNN, layer count
    double size_mb = 1.0;      ///< s_CNN, MB
    double depth_scale = 0.0;  ///< d_scale, dimensionless
};

struct DeviceProfile {
    ComputeAllocation allocation;
    double memory_bandwidth = 10000.0;  ///< m_client, MB/s
    CnnProfile cnn;                     ///< lightweight on-device CNN
    double wait_power = 0.5;            ///< P_wait, W; device power while idle on the edge
    double base_power = 0.0;            ///< P_base, W
    double thermal_fraction = 0.05;     ///< eta_theta in [0,1)
};

struct EdgeProfile {
    /// c_eps, model compute units. Absent = derive as 11.76 * c_client.
    std::optional<double> compute;
    double memory_bandwidth = 100000.0;  ///< m_eps, MB/s
    CnnProfile cnn;                      ///< large CNN hosted by this server
    double task_share = 0.0;             ///< omega_edge in [0,1]
    double distance = 0.0;               ///< d_eps, m
};

/// Edge compute defaults to this multiple of the client's allocated resource.
inline constexpr double kEdgeComputeRatio = 11.76;

/// Decoding takes this fraction of the encoding delay on equal hardware.
inline constexpr double kDefaultDecodeDiscount = 1.0 / 3.0;

struct EncoderConfig {
    double i_interval = 0.0;     ///< n_i, frames between I-frames
    double b_interval = 0.0;     ///< n_b, frames between B-frames
    double bitrate = 0.0;        ///< n_bitrate, Mbps
    double quantization = 0.0;   ///< n_quant
    double output_bytes = 1.0;   ///< delta_f3, MB
    double unit_scale = 1.0;     ///< calibration multiplier applied to s_f1 in the regression
    double decode_discount = kDefaultDecodeDiscount;  ///< gamma
};

struct SensorProfile {
    std::string id;                      ///< label used in reports
    double gen_frequency = 100.0;        ///< f_t, Hz
    double distance = 0.0;               ///< m, used when distance_series is empty
    std::vector<double> distance_series; ///< m, one entry per update index
    double packet_arrival_rate = 0.0;    ///< lambda contribution, 1/s (0 = gen_frequency)

    /// Distance at the n-th update (1-based). A series shorter than n holds its last value.
    double distance_at(int n) const {
        if (distance_series.empty()) return distance;
        const std::size_t i = static_cast<std::size_t>(n > 0 ? n - 1 : 0);
        return distance_series[i < distance_series.size() ? i : distance_series.size() - 1];
    }

    /// Single per-frame distance used by the AoI model (start-of-frame position).
    double frame_distance() const {
        return distance_series.empty() ? distance : distance_series.front();
    }

    double arrival_rate() const {
        return packet_arrival_rate > 0.0 ? packet_arrival_rate : gen_frequency;
    }
};

/// One M/M/1 buffer class.
struct BufferConfig {
    double arrival_rate = 50.0;   ///< lambda, 1/s
    double service_rate = 100.0;  ///< mu, 1/s
};

/// The three input-buffer classes: captured frames, volumetric data, external info.
struct BufferSet {
    BufferConfig frame;
    BufferConfig volumetric;
    BufferConfig external;
};

struct OffloadPlan {
    int local_flag = 1;                ///< omega_loc in {0,1}
    double client_share = 1.0;         ///< omega_client in [0,1]
    std::vector<double> edge_shares;   ///< omega_edge^e, mirrors the edges array
    double task_total = 1.0;           ///< omega_task
    bool include_coop = false;         ///< whether L_coop counts toward totals
    double local_result_latency = 0.0; ///< L_tr(loc), s
    double result_bytes = 0.01;        ///< delta_res, MB (inference result return payload)

    bool is_local() const { return local_flag == 1; }
};

struct NetworkProfile {
    double throughput = 80.0;          ///< r_w, Mbps
    double propagation_speed = units::kDefaultPropagationSpeed;  ///< c, m/s
    double handoff_latency = 0.0;      ///< l_HO, s
    double handoff_probability = 0.0;  ///< P_HO in [0,1]
    double coop_distance = 0.0;        ///< d_coop, m
    double coop_bytes = 0.0;           ///< delta_f4, MB
};

struct VolumetricConfig {
    double scene_area = 1.0;   ///< s_vol, Mpixel
    double scene_bytes = 2.0;  ///< delta_vol, MB
};

/// Segment identifiers shared by the latency and energy breakdowns.
enum class Segment {
    FrameGeneration,
    Volumetric,
    ExternalSensors,
    Rendering,
    FrameConversion,
    Encoding,
    LocalInference,
    RemoteInference,
    Transmission,
    Handoff,
    Cooperation,
};

inline constexpr int kSegmentCount = 11;

inline const char* segment_name(Segment s) {
    switch (s) {
        case Segment::FrameGeneration: return "fg";
        case Segment::Volumetric: return "vol";
        case Segment::ExternalSensors: return "ext";
        case Segment::Rendering: return "ren";
        case Segment::FrameConversion: return "fc";
        case Segment::Encoding: return "en";
        case Segment::LocalInference: return "loc";
        case Segment::RemoteInference: return "rem";
        case Segment::Transmission: return "tr";
        case Segment::Handoff: return "ho";
        case Segment::Cooperation: return "coop";
    }
    return "?";
}

/// Optional per-segment power overrides (W). Unset segments fall back to the
/// mean-power regression (active segments) or wait_power (idle segments).
struct PowerOverrides {
    std::optional<double> watts[kSegmentCount];

    std::optional<double> get(Segment s) const { return watts[static_cast<int>(s)]; }
    void set(Segment s, double w) { watts[static_cast<int>(s)] = w; }
    void set_all(double w) {
        for (auto& v : watts) v = w;
    }
};

/// Full declarative description of one evaluation scenario.
struct ScenarioSpec {
    std::string name;
    DeviceProfile device;
    std::vector<EdgeProfile> edges;
    NetworkProfile network;
    std::vector<SensorProfile> sensors;
    EncoderConfig encoder;
    FrameConfig frames;
    VolumetricConfig volumetric;
    BufferSet buffer;
    OffloadPlan offload;
    PowerOverrides power_overrides;
};

} // namespace xrperf

#endif // XRPERF_SCENARIO_HPP
