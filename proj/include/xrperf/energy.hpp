#ifndef XRPERF_ENERGY_HPP
#define XRPERF_ENERGY_HPP

#include <cstdint>

#include "xrperf/latency.hpp"
#include "xrperf/regression.hpp"
#include "xrperf/scenario.hpp"

namespace xrperf {

/// Per-segment energy for one frame, in joules. Same gating convention as
/// LatencyBreakdown: fields hold contributions, total is their plain sum plus
/// the thermal and base terms.
struct EnergyBreakdown {
    std::int64_t frame = 1;
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
    double thermal = 0.0;
    double base = 0.0;
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

/// Constant-power reduction of a segment's energy integral.
inline double segment_energy(double power_watts, double latency_seconds) {
    return power_watts * latency_seconds;
}

/// True for segments where the device computes; during remote inference,
/// transmission, and handoff the device only waits on the network/edge.
inline bool device_active_segment(Segment s) {
    switch (s) {
        case Segment::RemoteInference:
        case Segment::Transmission:
        case Segment::Handoff:
            return false;
        default:
            return true;
    }
}

/// Charges every latency segment at its power level: the mean-power
/// regression while the device computes, the wait power while it idles, with
/// per-segment overrides honored. The thermal term is a fixed fraction of the
/// consumed subtotal and the base term runs for the whole frame.
inline EnergyBreakdown compose_frame_energy(const ScenarioSpec& spec,
                                            const LatencyBreakdown& latency,
                                            const CoefficientSet& coeffs = paper_coefficients(),
                                            WarningList* warnings = nullptr) {
    const double p_active =
        mean_power(spec.device.allocation, spec.device.base_power, coeffs, warnings);
    const double p_wait = spec.device.wait_power;

    EnergyBreakdown out;
    out.frame = latency.frame;

    double segments[kSegmentCount];
    for (int i = 0; i < kSegmentCount; ++i) {
        const auto seg = static_cast<Segment>(i);
        const auto override_w = spec.power_overrides.get(seg);
        const double watts =
            override_w ? *override_w : (device_active_segment(seg) ? p_active : p_wait);
        segments[i] = segment_energy(watts, latency.segment(seg));
    }
    out.fg = segments[static_cast<int>(Segment::FrameGeneration)];
    out.vol = segments[static_cast<int>(Segment::Volumetric)];
    out.ext = segments[static_cast<int>(Segment::ExternalSensors)];
    out.ren = segments[static_cast<int>(Segment::Rendering)];
    out.fc = segments[static_cast<int>(Segment::FrameConversion)];
    out.en = segments[static_cast<int>(Segment::Encoding)];
    out.loc = segments[static_cast<int>(Segment::LocalInference)];
    out.rem = segments[static_cast<int>(Segment::RemoteInference)];
    out.tr = segments[static_cast<int>(Segment::Transmission)];
    out.ho = segments[static_cast<int>(Segment::Handoff)];
    out.coop = segments[static_cast<int>(Segment::Cooperation)];

    const double subtotal = out.sum_of_segments();
    out.thermal = spec.device.thermal_fraction * subtotal;
    out.base = segment_energy(spec.device.base_power, latency.total);
    out.total = subtotal + out.thermal + out.base;
    return out;
}

} // namespace xrperf

#endif // XRPERF_ENERGY_HPP
