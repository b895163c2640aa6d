#ifndef XRPERF_ENGINE_HPP
#define XRPERF_ENGINE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "xrperf/aoi.hpp"
#include "xrperf/csv.hpp"
#include "xrperf/energy.hpp"
#include "xrperf/json_io.hpp"
#include "xrperf/latency.hpp"
#include "xrperf/regression.hpp"
#include "xrperf/scenario.hpp"
#include "xrperf/simoracle.hpp"
#include "xrperf/validation.hpp"

namespace xrperf {

struct FrameResult {
    std::int64_t frame = 1;
    LatencyBreakdown latency;
    EnergyBreakdown energy;
    AoiReport aoi;
    WarningList warnings;
};

struct EvaluationResult {
    ValidationReport validation;
    std::int64_t frame_begin = 1;
    std::int64_t frame_end = 1;
    std::vector<FrameResult> frames;
};

/// Evaluates the closed-form pipeline for every frame in [begin, end].
/// Throws ModelError (exit-code-2 class) when the scenario has validation
/// errors; warnings are carried through into the result.
inline EvaluationResult run_evaluation(const ScenarioSpec& spec, std::int64_t frame_begin,
                                       std::int64_t frame_end,
                                       const CoefficientSet& coeffs = paper_coefficients()) {
    EvaluationResult result;
    result.validation = validate_scenario(spec, coeffs);
    if (!result.validation.ok()) {
        std::string msg = "scenario rejected:";
        for (const auto& v : result.validation.violations) {
            if (v.severity == Severity::Error) {
                msg += " [" + v.field + "] " + v.message + ";";
            }
        }
        throw ModelError(msg);
    }
    if (frame_end < frame_begin) {
        throw ModelError("empty frame range " + std::to_string(frame_begin) + ".." +
                         std::to_string(frame_end));
    }
    result.frame_begin = frame_begin;
    result.frame_end = frame_end;
    result.frames.reserve(static_cast<std::size_t>(frame_end - frame_begin + 1));
    for (std::int64_t q = frame_begin; q <= frame_end; ++q) {
        FrameResult fr;
        fr.frame = q;
        fr.latency = compose_frame_latency(spec, q, coeffs, &fr.warnings);
        fr.energy = compose_frame_energy(spec, fr.latency, coeffs, &fr.warnings);
        fr.aoi = build_aoi_report(spec, q, fr.latency.total);
        result.frames.push_back(std::move(fr));
    }
    return result;
}

inline EvaluationResult run_evaluation(const ScenarioSpec& spec,
                                       const CoefficientSet& coeffs = paper_coefficients()) {
    return run_evaluation(spec, 1, spec.frames.frame_count, coeffs);
}

/// --- report emitters (CSV numerics: 9 significant digits, ms / mJ) ---------

inline void write_latency_csv(std::ostream& out, const EvaluationResult& result) {
    CsvWriter csv(out);
    std::vector<std::string> header{"frame"};
    for (int s = 0; s < kSegmentCount; ++s) header.push_back(segment_name(static_cast<Segment>(s)));
    header.push_back("total");
    csv.header(header);
    for (const auto& fr : result.frames) {
        std::vector<double> cells;
        for (int s = 0; s < kSegmentCount; ++s) {
            cells.push_back(fr.latency.segment(static_cast<Segment>(s)) * units::kMsPerSecond);
        }
        cells.push_back(fr.latency.total * units::kMsPerSecond);
        csv.row({std::to_string(fr.frame)}, cells);
    }
}

inline void write_energy_csv(std::ostream& out, const EvaluationResult& result) {
    CsvWriter csv(out);
    std::vector<std::string> header{"frame"};
    for (int s = 0; s < kSegmentCount; ++s) header.push_back(segment_name(static_cast<Segment>(s)));
    header.insert(header.end(), {"thermal", "base", "total"});
    csv.header(header);
    for (const auto& fr : result.frames) {
        std::vector<double> cells;
        for (int s = 0; s < kSegmentCount; ++s) {
            cells.push_back(fr.energy.segment(static_cast<Segment>(s)) * 1000.0);
        }
        cells.push_back(fr.energy.thermal * 1000.0);
        cells.push_back(fr.energy.base * 1000.0);
        cells.push_back(fr.energy.total * 1000.0);
        csv.row({std::to_string(fr.frame)}, cells);
    }
}

inline void write_aoi_samples_csv(std::ostream& out, const EvaluationResult& result) {
    CsvWriter csv(out);
    csv.header({"frame", "sensor", "update", "age_ms", "age_clamped_ms"});
    for (const auto& fr : result.frames) {
        for (const auto& sensor : fr.aoi.sensors) {
            for (std::size_t n = 0; n < sensor.samples.size(); ++n) {
                csv.row({std::to_string(fr.frame), sensor.sensor_id, std::to_string(n + 1)},
                        {sensor.samples[n] * units::kMsPerSecond,
                         sensor.clamped_sample(n) * units::kMsPerSecond});
            }
        }
    }
}

inline void write_aoi_summary_csv(std::ostream& out, const EvaluationResult& result) {
    CsvWriter csv(out);
    csv.header({"frame", "sensor", "average_age_ms", "processed_hz", "required_hz", "roi",
                "fresh"});
    for (const auto& fr : result.frames) {
        for (const auto& sensor : fr.aoi.sensors) {
            csv.row({std::to_string(fr.frame), sensor.sensor_id},
                    {sensor.average * units::kMsPerSecond, sensor.processed_frequency,
                     fr.aoi.required_frequency, sensor.roi,
                     static_cast<double>(sensor.fresh ? 1 : 0)});
        }
    }
}

/// Human-readable summary, 4 significant digits. Per-frame numbers are
/// constant across a run (the closed-form model has no frame index), so one
/// breakdown stands for the whole range.
inline void write_summary(std::ostream& out, const ScenarioSpec& spec,
                          const EvaluationResult& result) {
    const auto fmt = [](double v) { return format_value(v, 4); };
    const FrameResult& fr = result.frames.front();
    out << "frames evaluated: " << result.frame_begin << ".." << result.frame_end << "\n";
    out << "inference placement: " << (spec.offload.is_local() ? "local" : "remote") << "\n\n";

    out << "latency breakdown (ms per frame)\n";
    for (int s = 0; s < kSegmentCount; ++s) {
        out << "  " << segment_name(static_cast<Segment>(s)) << ": "
            << fmt(fr.latency.segment(static_cast<Segment>(s)) * units::kMsPerSecond) << "\n";
    }
    out << "  total: " << fmt(fr.latency.total * units::kMsPerSecond) << "\n\n";

    out << "energy breakdown (mJ per frame)\n";
    for (int s = 0; s < kSegmentCount; ++s) {
        out << "  " << segment_name(static_cast<Segment>(s)) << ": "
            << fmt(fr.energy.segment(static_cast<Segment>(s)) * 1000.0) << "\n";
    }
    out << "  thermal: " << fmt(fr.energy.thermal * 1000.0) << "\n";
    out << "  base: " << fmt(fr.energy.base * 1000.0) << "\n";
    out << "  total: " << fmt(fr.energy.total * 1000.0) << "\n\n";

    out << "information freshness\n";
    if (fr.aoi.sensors.empty()) {
        out << "  no external sensors configured\n";
    }
    for (const auto& sensor : fr.aoi.sensors) {
        out << "  " << sensor.sensor_id << ": average age "
            << fmt(sensor.average * units::kMsPerSecond) << " ms, processed "
            << fmt(sensor.processed_frequency) << " Hz, required "
            << fmt(fr.aoi.required_frequency) << " Hz, roi " << fmt(sensor.roi)
            << (sensor.degenerate ? " (degenerate)" : (sensor.fresh ? " (fresh)" : " (stale)"))
            << "\n";
    }

    bool any_note = false;
    for (const auto& v : result.validation.violations) {
        if (v.severity == Severity::Warning) {
            if (!any_note) { out << "\nwarnings\n"; any_note = true; }
            out << "  [" << v.field << "] " << v.message << "\n";
        }
    }
    for (const auto& w : fr.warnings) {
        if (!any_note) { out << "\nwarnings\n"; any_note = true; }
        out << "  " << w << "\n";
    }
}

/// --- parameter sweeps -------------------------------------------------------

struct SweepPoint {
    double value = 0.0;
    double c_client = 0.0;
    FrameResult frame;
};

/// Re-evaluates the scenario once per value of the dotted parameter path.
/// Points come back sorted by swept value no matter the input order.
inline std::vector<SweepPoint> run_sweep(const json& scenario_root, const std::string& path,
                                         std::vector<double> values,
                                         const CoefficientSet& coeffs = paper_coefficients()) {
    if (values.empty()) throw ParseError("sweep value list is empty");
    std::sort(values.begin(), values.end());
    std::vector<SweepPoint> points;
    points.reserve(values.size());
    for (double v : values) {
        json doc = scenario_root;
        set_scenario_value(doc, path, v);
        const ScenarioSpec spec = parse_scenario(doc);
        EvaluationResult eval = run_evaluation(spec, 1, 1, coeffs);
        SweepPoint point;
        point.value = v;
        point.c_client = compute_resource(spec.device.allocation, coeffs);
        point.frame = std::move(eval.frames.front());
        points.push_back(std::move(point));
    }
    return points;
}

inline void write_sweep_csv(std::ostream& out, const std::string& path,
                            const std::vector<SweepPoint>& points) {
    CsvWriter csv(out);
    std::vector<std::string> header{path, "c_client"};
    for (int s = 0; s < kSegmentCount; ++s) header.push_back(segment_name(static_cast<Segment>(s)));
    header.insert(header.end(), {"latency_total_ms", "energy_total_mj", "clamp_warnings"});
    csv.header(header);
    for (const auto& p : points) {
        std::vector<double> cells{p.value, p.c_client};
        for (int s = 0; s < kSegmentCount; ++s) {
            cells.push_back(p.frame.latency.segment(static_cast<Segment>(s)) * units::kMsPerSecond);
        }
        cells.push_back(p.frame.latency.total * units::kMsPerSecond);
        cells.push_back(p.frame.energy.total * 1000.0);
        cells.push_back(static_cast<double>(p.frame.warnings.size()));
        csv.row(cells);
    }
}

/// --- simulation comparison tables -------------------------------------------

struct Mm1Comparison {
    std::string buffer_name;
    double lambda = 0.0;
    double mu = 0.0;
    double analytic_sojourn = 0.0;
    double simulated_sojourn = 0.0;
    double rel_error = 0.0;
    double utilization = 0.0;
    std::int64_t customers = 0;
};

/// Runs the queue oracle against each buffer class and compares with the
/// closed-form sojourn. Buffer classes use consecutive seed offsets so their
/// draws stay independent.
inline std::vector<Mm1Comparison> run_mm1_comparison(const ScenarioSpec& spec,
                                                     std::int64_t customers,
                                                     std::uint64_t seed) {
    std::vector<Mm1Comparison> rows;
    const std::pair<const char*, const BufferConfig*> buffers[] = {
        {"frame", &spec.buffer.frame},
        {"volumetric", &spec.buffer.volumetric},
        {"external", &spec.buffer.external},
    };
    std::uint64_t offset = 0;
    for (const auto& [name, buffer] : buffers) {
        Mm1Comparison row;
        row.buffer_name = name;
        row.lambda = buffer->arrival_rate;
        row.mu = buffer->service_rate;
        row.analytic_sojourn = mean_sojourn(*buffer);
        const Mm1Stats stats =
            simulate_mm1(buffer->arrival_rate, buffer->service_rate, customers, seed + offset);
        row.simulated_sojourn = stats.mean_sojourn;
        row.rel_error = (stats.mean_sojourn - row.analytic_sojourn) / row.analytic_sojourn;
        row.utilization = stats.utilization;
        row.customers = stats.sample_count;
        rows.push_back(std::move(row));
        ++offset;
    }
    return rows;
}

inline void write_mm1_csv(std::ostream& out, const std::vector<Mm1Comparison>& rows) {
    CsvWriter csv(out);
    csv.header({"buffer", "lambda", "mu", "analytic_sojourn_s", "simulated_sojourn_s",
                "rel_error", "utilization", "customers"});
    for (const auto& r : rows) {
        csv.row({r.buffer_name}, {r.lambda, r.mu, r.analytic_sojourn, r.simulated_sojourn,
                                  r.rel_error, r.utilization, static_cast<double>(r.customers)});
    }
}

inline json mm1_stats_json(const std::vector<Mm1Comparison>& rows, std::uint64_t seed) {
    json j;
    j["mode"] = "mm1";
    j["seed"] = seed;
    json buffers = json::array();
    for (const auto& r : rows) {
        json b;
        b["buffer"] = r.buffer_name;
        b["lambda"] = r.lambda;
        b["mu"] = r.mu;
        b["analytic_sojourn_s"] = r.analytic_sojourn;
        b["simulated_sojourn_s"] = r.simulated_sojourn;
        b["rel_error"] = r.rel_error;
        b["utilization"] = r.utilization;
        b["customers"] = r.customers;
        buffers.push_back(std::move(b));
    }
    j["buffers"] = std::move(buffers);
    return j;
}

struct AoiComparisonRow {
    std::string sensor_id;
    int update = 0;
    double analytic_s = 0.0;
    double simulated_s = 0.0;
    double abs_deviation_s = 0.0;
};

struct AoiComparison {
    std::vector<AoiComparisonRow> rows;
    double max_abs_deviation_s = 0.0;
    double required_frequency = 0.0;
};

/// Replays the external-sensor timeline through the event simulator and lines
/// the measured ages up against the closed-form samples. The request rate is
/// the one the evaluated frame implies (N updates over its total latency).
inline AoiComparison run_aoi_comparison(const ScenarioSpec& spec, std::uint64_t seed,
                                        SojournMode mode = SojournMode::Fixed,
                                        const CoefficientSet& coeffs = paper_coefficients()) {
    EvaluationResult eval = run_evaluation(spec, 1, 1, coeffs);
    const AoiReport& report = eval.frames.front().aoi;

    AoiComparison cmp;
    cmp.required_frequency = report.required_frequency;
    const auto simulated =
        simulate_aoi(spec.sensors, report.required_frequency, report.n_updates,
                     spec.buffer.external, spec.network.propagation_speed, seed,
                     AoiPolicy::PaperMapping, mode);
    for (std::size_t m = 0; m < report.sensors.size(); ++m) {
        const auto& sensor = report.sensors[m];
        for (std::size_t n = 0; n < sensor.samples.size(); ++n) {
            AoiComparisonRow row;
            row.sensor_id = sensor.sensor_id;
            row.update = static_cast<int>(n + 1);
            row.analytic_s = sensor.samples[n];
            row.simulated_s = simulated[m][n];
            row.abs_deviation_s = std::abs(row.simulated_s - row.analytic_s);
            cmp.max_abs_deviation_s = std::max(cmp.max_abs_deviation_s, row.abs_deviation_s);
            cmp.rows.push_back(std::move(row));
        }
    }
    return cmp;
}

inline void write_aoi_comparison_csv(std::ostream& out, const AoiComparison& cmp) {
    CsvWriter csv(out);
    csv.header({"sensor", "update", "analytic_age_ms", "simulated_age_ms", "abs_deviation_ms"});
    for (const auto& r : cmp.rows) {
        csv.row({r.sensor_id, std::to_string(r.update)},
                {r.analytic_s * units::kMsPerSecond, r.simulated_s * units::kMsPerSecond,
                 r.abs_deviation_s * units::kMsPerSecond});
    }
}

inline json aoi_stats_json(const AoiComparison& cmp, std::uint64_t seed, SojournMode mode) {
    json j;
    j["mode"] = "aoi";
    j["seed"] = seed;
    j["sojourn"] = mode == SojournMode::Fixed ? "fixed" : "stochastic";
    j["required_frequency_hz"] = cmp.required_frequency;
    j["samples"] = cmp.rows.size();
    j["max_abs_deviation_s"] = cmp.max_abs_deviation_s;
    return j;
}

} // namespace xrperf

#endif // XRPERF_ENGINE_HPP
