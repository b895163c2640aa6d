#ifndef XRPERF_REGRESSION_HPP
#define XRPERF_REGRESSION_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xrperf/errors.hpp"
#include "xrperf/scenario.hpp"

namespace xrperf {

/// Warnings collected while evaluating a scenario (clamped regressions,
/// out-of-domain inputs). Evaluation never aborts on these.
using WarningList = std::vector<std::string>;

inline void add_warning(WarningList* warnings, const std::string& msg) {
    if (warnings) warnings->push_back(msg);
}

/// A fitted multiple-linear-regression model: y = intercept + coefficients . features.
struct LinearModel {
    double intercept = 0.0;
    std::vector<double> coefficients;
    std::vector<std::string> feature_names;
    std::optional<double> r_squared;

    double evaluate(std::span<const double> features) const {
        double y = intercept;
        for (std::size_t i = 0; i < coefficients.size(); ++i) y += coefficients[i] * features[i];
        return y;
    }

    double evaluate(std::initializer_list<double> features) const {
        return evaluate(std::span<const double>(features.begin(), features.size()));
    }
};

/// The six fitted models the engine consumes, addressable by role name.
/// The built-in "paper" set carries the published coefficients; refits may
/// replace any role while keeping the rest.
struct CoefficientSet {
    std::string name = "paper";
    LinearModel compute_cpu;  ///< allocated resource, CPU branch; features {f_c^2, f_c}
    LinearModel compute_gpu;  ///< allocated resource, GPU branch; features {f_g^2, f_g}
    LinearModel power_cpu;    ///< mean power, CPU branch; features {f_c, f_c^2}
    LinearModel power_gpu;    ///< mean power, GPU branch; features {f_g, f_g^2}
    LinearModel encoding;     ///< encoding time numerator; features {n_i, n_b, n_bitrate, s_f1, n_fps, n_quant}
    LinearModel cnn;          ///< CNN complexity; features {d_CNN, s_CNN, d_scale}

    LinearModel* find(const std::string& role) {
        if (role == "compute_cpu") return &compute_cpu;
        if (role == "compute_gpu") return &compute_gpu;
        if (role == "power_cpu") return &power_cpu;
        if (role == "power_gpu") return &power_gpu;
        if (role == "encoding") return &encoding;
        if (role == "cnn") return &cnn;
        return nullptr;
    }
    const LinearModel* find(const std::string& role) const {
        return const_cast<CoefficientSet*>(this)->find(role);
    }
};

inline const std::vector<std::string>& coefficient_roles() {
    static const std::vector<std::string> roles = {
        "compute_cpu", "compute_gpu", "power_cpu", "power_gpu", "encoding", "cnn"};
    return roles;
}

/// Published coefficient set ("paper" mode). R^2 values are the reported fits.
inline const CoefficientSet& paper_coefficients() {
    static const CoefficientSet set = [] {
        CoefficientSet s;
        s.name = "paper-v1";
        s.compute_cpu = {18.24, {1.84, -6.02}, {"f_c^2", "f_c"}, 0.87};
        s.compute_gpu = {193.67, {400.96, -558.29}, {"f_g^2", "f_g"}, 0.87};
        s.power_cpu = {-20.74, {18.85, -3.64}, {"f_c", "f_c^2"}, 0.863};
        s.power_gpu = {-62.197, {187.48, -135.11}, {"f_g", "f_g^2"}, 0.863};
        s.encoding = {-574.36,
                      {-7.71, 142.61, 53.38, 1.43, 163.65, 3.62},
                      {"n_i", "n_b", "n_bitrate", "s_f1", "n_fps", "n_quant"},
                      0.79};
        s.cnn = {2.45, {0.0025, 0.03, 0.0029}, {"d_cnn", "s_cnn", "d_scale"}, 0.844};
        return s;
    }();
    return set;
}

/// Floor applied when the allocation regression goes non-positive.
inline constexpr double kComputeClampFloor = 1e-3;

/// Allocated computation resource c from clocks and the CPU/GPU split.
/// Non-positive regression output (extrapolation artifact) is clamped to
/// kComputeClampFloor and reported as a warning, never an error.
inline double compute_resource(const ComputeAllocation& alloc,
                               const CoefficientSet& coeffs = paper_coefficients(),
                               WarningList* warnings = nullptr) {
    const double fc = alloc.cpu_clock;
    const double fg = alloc.gpu_clock;
    const double cpu = coeffs.compute_cpu.evaluate({fc * fc, fc});
    const double gpu = coeffs.compute_gpu.evaluate({fg * fg, fg});
    const double c = alloc.cpu_share * cpu + alloc.gpu_share() * gpu;
    if (c <= 0.0) {
        add_warning(warnings, "compute_resource: regression output " + std::to_string(c) +
                                  " clamped to floor " + std::to_string(kComputeClampFloor));
        return kComputeClampFloor;
    }
    return c;
}

/// Mean device power draw (W) for the allocation. A negative regression
/// output is clamped to the device base power with a warning.
inline double mean_power(const ComputeAllocation& alloc, double base_power = 0.0,
                         const CoefficientSet& coeffs = paper_coefficients(),
                         WarningList* warnings = nullptr) {
    const double fc = alloc.cpu_clock;
    const double fg = alloc.gpu_clock;
    const double cpu = coeffs.power_cpu.evaluate({fc, fc * fc});
    const double gpu = coeffs.power_gpu.evaluate({fg, fg * fg});
    const double p = alloc.cpu_share * cpu + alloc.gpu_share() * gpu;
    if (p < 0.0) {
        add_warning(warnings, "mean_power: regression output " + std::to_string(p) +
                                  " W clamped to base power " + std::to_string(base_power) + " W");
        return base_power;
    }
    return p;
}

/// Complexity scalar of a CNN from its depth, storage size, and depth scaling.
inline double cnn_complexity(const CnnProfile& cnn,
                             const CoefficientSet& coeffs = paper_coefficients()) {
    return coeffs.cnn.evaluate({cnn.depth, cnn.size_mb, cnn.depth_scale});
}

/// Raw encoding-time numerator in model time units (interpreted as ms once
/// divided by c_client). May be negative; the latency module clamps it.
inline double encoding_latency_raw(const EncoderConfig& enc, const FrameConfig& frames,
                                   const CoefficientSet& coeffs = paper_coefficients()) {
    return coeffs.encoding.evaluate({enc.i_interval, enc.b_interval, enc.bitrate,
                                     frames.frame_area * enc.unit_scale, frames.frame_rate,
                                     enc.quantization});
}

} // namespace xrperf

#endif // XRPERF_REGRESSION_HPP
