#ifndef XRPERF_JSON_IO_HPP
#define XRPERF_JSON_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "xrperf/errors.hpp"
#include "xrperf/regression.hpp"
#include "xrperf/scenario.hpp"

namespace xrperf {

using json = nlohmann::json;

namespace detail {

inline double num_at(const json& j, const std::string& key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number()) {
        throw ParseError(ctx + ": missing numeric field '" + key + "'");
    }
    return it->get<double>();
}

inline double num_or(const json& j, const std::string& key, double fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number()) throw ParseError("field '" + key + "' must be a number");
    return it->get<double>();
}

inline int int_or(const json& j, const std::string& key, int fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number_integer()) throw ParseError("field '" + key + "' must be an integer");
    return it->get<int>();
}

inline CnnProfile parse_cnn(const json& j, const std::string& ctx) {
    CnnProfile cnn;
    cnn.depth = num_or(j, "depth", 0.0);
    cnn.size_mb = num_at(j, "size_mb", ctx);
    cnn.depth_scale = num_or(j, "depth_scale", 0.0);
    return cnn;
}

inline BufferConfig parse_buffer(const json& j, const std::string& ctx) {
    BufferConfig b;
    b.arrival_rate = num_at(j, "arrival_rate", ctx);
    b.service_rate = num_at(j, "service_rate", ctx);
    return b;
}

} // namespace detail

/// Builds a ScenarioSpec from its JSON form. Throws ParseError on a missing
/// required field or a type mismatch; physical range checks are left to
/// validate_scenario.
inline ScenarioSpec parse_scenario(const json& root) {
    if (!root.is_object()) throw ParseError("scenario root must be an object");
    ScenarioSpec spec;
    spec.name = root.value("name", "");
    using detail::int_or;
    using detail::num_at;
    using detail::num_or;

    // frames
    {
        const auto it = root.find("frames");
        if (it == root.end()) throw ParseError("missing 'frames' section");
        const json& j = *it;
        auto& fr = spec.frames;
        fr.frame_rate = num_at(j, "frame_rate", "frames");
        fr.frame_area = num_at(j, "frame_area", "frames");
        fr.frame_bytes = num_at(j, "frame_bytes", "frames");
        fr.converted_area = num_or(j, "converted_area", fr.frame_area);
        fr.converted_bytes = num_or(j, "converted_bytes", fr.frame_bytes);
        fr.encoded_area = num_or(j, "encoded_area", fr.frame_area);
        fr.frame_count = int_or(j, "frame_count", 1);
        fr.updates_per_frame = int_or(j, "updates_per_frame", 1);
    }

    // device
    {
        const auto it = root.find("device");
        if (it == root.end()) throw ParseError("missing 'device' section");
        const json& j = *it;
        auto& dev = spec.device;
        const auto ait = j.find("allocation");
        if (ait == j.end()) throw ParseError("device: missing 'allocation'");
        dev.allocation.cpu_clock = num_at(*ait, "cpu_clock", "device.allocation");
        dev.allocation.gpu_clock = num_at(*ait, "gpu_clock", "device.allocation");
        dev.allocation.cpu_share = num_at(*ait, "cpu_share", "device.allocation");
        dev.memory_bandwidth = num_at(j, "memory_bandwidth", "device");
        if (auto cit = j.find("cnn"); cit != j.end()) {
            dev.cnn = detail::parse_cnn(*cit, "device.cnn");
        }
    }

    // edges (optional; may be empty for purely local plans)
    if (auto it = root.find("edges"); it != root.end()) {
        if (!it->is_array()) throw ParseError("'edges' must be an array");
        for (std::size_t e = 0; e < it->size(); ++e) {
            const json& j = (*it)[e];
            const std::string ctx = "edges." + std::to_string(e);
            EdgeProfile edge;
            if (j.contains("compute")) edge.compute = num_at(j, "compute", ctx);
            edge.memory_bandwidth = num_at(j, "memory_bandwidth", ctx);
            edge.task_share = num_or(j, "task_share", 0.0);
            edge.distance = num_or(j, "distance", 0.0);
            if (auto cit = j.find("cnn"); cit != j.end()) {
                edge.cnn = detail::parse_cnn(*cit, ctx + ".cnn");
            }
            spec.edges.push_back(edge);
        }
    }

    // network
    {
        const auto it = root.find("network");
        if (it == root.end()) throw ParseError("missing 'network' section");
        const json& j = *it;
        auto& net = spec.network;
        net.throughput = num_at(j, "throughput", "network");
        net.propagation_speed = num_or(j, "propagation_speed", units::kDefaultPropagationSpeed);
        net.handoff_latency = num_or(j, "handoff_latency", 0.0);
        net.handoff_probability = num_or(j, "handoff_probability", 0.0);
        net.coop_distance = num_or(j, "coop_distance", 0.0);
        net.coop_bytes = num_or(j, "coop_bytes", 0.0);
    }

    // sensors (optional)
    if (auto it = root.find("sensors"); it != root.end()) {
        if (!it->is_array()) throw ParseError("'sensors' must be an array");
        for (std::size_t m = 0; m < it->size(); ++m) {
            const json& j = (*it)[m];
            const std::string ctx = "sensors." + std::to_string(m);
            SensorProfile s;
            s.id = j.value("id", "sensor" + std::to_string(m));
            s.gen_frequency = num_at(j, "gen_frequency", ctx);
            s.distance = num_or(j, "distance", 0.0);
            if (auto dit = j.find("distance_series"); dit != j.end()) {
                if (!dit->is_array()) throw ParseError(ctx + ": distance_series must be an array");
                for (const auto& d : *dit) {
                    if (!d.is_number()) throw ParseError(ctx + ": distances must be numbers");
                    s.distance_series.push_back(d.get<double>());
                }
            }
            s.packet_arrival_rate = num_or(j, "packet_arrival_rate", 0.0);
            spec.sensors.push_back(std::move(s));
        }
    }

    // encoder
    {
        const auto it = root.find("encoder");
        if (it == root.end()) throw ParseError("missing 'encoder' section");
        const json& j = *it;
        auto& enc = spec.encoder;
        enc.i_interval = num_at(j, "i_interval", "encoder");
        enc.b_interval = num_at(j, "b_interval", "encoder");
        enc.bitrate = num_at(j, "bitrate", "encoder");
        enc.quantization = num_at(j, "quantization", "encoder");
        enc.output_bytes = num_at(j, "output_bytes", "encoder");
        enc.unit_scale = num_or(j, "unit_scale", 1.0);
        enc.decode_discount = num_or(j, "decode_discount", kDefaultDecodeDiscount);
        spec.frames.encoded_bytes = enc.output_bytes;
    }

    // volumetric
    {
        const auto it = root.find("volumetric");
        if (it == root.end()) throw ParseError("missing 'volumetric' section");
        spec.volumetric.scene_area = num_at(*it, "scene_area", "volumetric");
        spec.volumetric.scene_bytes = num_at(*it, "scene_bytes", "volumetric");
    }

    // buffer
    {
        const auto it = root.find("buffer");
        if (it == root.end()) throw ParseError("missing 'buffer' section");
        const json& j = *it;
        for (const char* key : {"frame", "volumetric", "external"}) {
            if (!j.contains(key)) {
                throw ParseError(std::string("buffer: missing '") + key + "' queue");
            }
        }
        spec.buffer.frame = detail::parse_buffer(j["frame"], "buffer.frame");
        spec.buffer.volumetric = detail::parse_buffer(j["volumetric"], "buffer.volumetric");
        spec.buffer.external = detail::parse_buffer(j["external"], "buffer.external");
    }

    // offload
    {
        const auto it = root.find("offload");
        if (it == root.end()) throw ParseError("missing 'offload' section");
        const json& j = *it;
        auto& plan = spec.offload;
        plan.local_flag = int_or(j, "local", 1);
        plan.client_share = num_or(j, "client_share", plan.local_flag ? 1.0 : 0.0);
        if (auto sit = j.find("edge_shares"); sit != j.end()) {
            if (!sit->is_array()) throw ParseError("offload.edge_shares must be an array");
            for (const auto& s : *sit) {
                if (!s.is_number()) throw ParseError("offload.edge_shares must hold numbers");
                plan.edge_shares.push_back(s.get<double>());
            }
        } else {
            plan.edge_shares.assign(spec.edges.size(), 0.0);
        }
        double sum = plan.client_share;
        for (double s : plan.edge_shares) sum += s;
        plan.task_total = num_or(j, "task_total", sum);
        plan.include_coop = j.value("include_coop", false);
        plan.local_result_latency = num_or(j, "local_result_latency", 0.0);
        plan.result_bytes = num_or(j, "result_bytes", 0.01);
    }

    // power (optional section)
    if (auto it = root.find("power"); it != root.end()) {
        const json& j = *it;
        spec.device.base_power = num_or(j, "base_power", 0.0);
        spec.device.wait_power = num_or(j, "wait_power", spec.device.base_power + 0.5);
        spec.device.thermal_fraction = num_or(j, "thermal_fraction", 0.05);
        if (auto oit = j.find("overrides"); oit != j.end()) {
            if (!oit->is_object()) throw ParseError("power.overrides must be an object");
            for (const auto& [key, value] : oit->items()) {
                bool known = false;
                for (int s = 0; s < kSegmentCount; ++s) {
                    if (key == segment_name(static_cast<Segment>(s))) {
                        if (!value.is_number()) {
                            throw ParseError("power.overrides." + key + " must be a number");
                        }
                        spec.power_overrides.set(static_cast<Segment>(s), value.get<double>());
                        known = true;
                        break;
                    }
                }
                if (!known) throw ParseError("power.overrides: unknown segment '" + key + "'");
            }
        }
    }

    return spec;
}

inline ScenarioSpec load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    json root;
    try {
        in >> root;
    } catch (const json::exception& e) {
        throw ParseError("scenario '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_scenario(root);
}

/// --- coefficient registry -------------------------------------------------

inline json model_to_json(const LinearModel& m) {
    json j;
    j["intercept"] = m.intercept;
    j["coefficients"] = m.coefficients;
    j["feature_names"] = m.feature_names;
    if (m.r_squared) j["r_squared"] = *m.r_squared;
    return j;
}

inline LinearModel model_from_json(const json& j, const std::string& ctx) {
    LinearModel m;
    m.intercept = detail::num_at(j, "intercept", ctx);
    const auto cit = j.find("coefficients");
    if (cit == j.end() || !cit->is_array()) {
        throw ParseError(ctx + ": missing 'coefficients' array");
    }
    for (const auto& c : *cit) {
        if (!c.is_number()) throw ParseError(ctx + ": coefficients must be numbers");
        m.coefficients.push_back(c.get<double>());
    }
    if (auto fit = j.find("feature_names"); fit != j.end()) {
        for (const auto& f : *fit) m.feature_names.push_back(f.get<std::string>());
    }
    if (auto rit = j.find("r_squared"); rit != j.end() && rit->is_number()) {
        m.r_squared = rit->get<double>();
    }
    return m;
}

inline json coefficients_to_json(const CoefficientSet& set) {
    json root;
    root["name"] = set.name;
    json models;
    for (const std::string& role : coefficient_roles()) {
        models[role] = model_to_json(*set.find(role));
    }
    root["models"] = models;
    return root;
}

inline CoefficientSet coefficients_from_json(const json& root) {
    CoefficientSet set = paper_coefficients();
    set.name = root.value("name", "custom");
    const auto mit = root.find("models");
    if (mit == root.end() || !mit->is_object()) {
        throw ParseError("coefficient file: missing 'models' object");
    }
    for (const auto& [role, value] : mit->items()) {
        LinearModel* slot = set.find(role);
        if (!slot) throw ParseError("coefficient file: unknown model role '" + role + "'");
        *slot = model_from_json(value, "models." + role);
    }
    return set;
}

inline CoefficientSet load_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open coefficient file: " + path);
    json root;
    try {
        in >> root;
    } catch (const json::exception& e) {
        throw ParseError("coefficient file '" + path + "' is not valid JSON: " + e.what());
    }
    return coefficients_from_json(root);
}

/// Resolves a --coefficients argument: the built-in name "paper" or a path to
/// a registry file.
inline CoefficientSet resolve_coefficients(const std::string& name) {
    if (name.empty() || name == "paper" || name == paper_coefficients().name) {
        return paper_coefficients();
    }
    return load_coefficients(name);
}

inline void save_coefficients(const CoefficientSet& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write coefficient file: " + path);
    out << coefficients_to_json(set).dump(2) << '\n';
}

/// Stores one fitted model under `role` in the registry file at `path`,
/// creating the file (seeded from the published set) when absent.
inline void register_model(const LinearModel& model, const std::string& role,
                           const std::string& path, const std::string& set_name = "custom") {
    CoefficientSet set = paper_coefficients();
    if (std::ifstream probe(path); probe.good()) {
        set = load_coefficients(path);
    } else {
        set.name = set_name;
    }
    LinearModel* slot = set.find(role);
    if (!slot) throw ParseError("unknown model role '" + role + "'");
    *slot = model;
    save_coefficients(set, path);
}

/// --- sweep parameter paths --------------------------------------------------

/// Writes `value` at a dotted path ("offload.client_share", "edges.0.task_share")
/// inside a scenario JSON document. The full path must already name a numeric
/// field; creating new keys would silently sweep nothing, so that is an error.
inline void set_scenario_value(json& root, const std::string& dotted_path, double value) {
    std::string pointer = "/";
    for (char ch : dotted_path) pointer += ch == '.' ? '/' : ch;
    try {
        json::json_pointer ptr(pointer);
        if (!root.contains(ptr)) {
            throw ParseError("sweep path not found: " + dotted_path);
        }
        if (!root.at(ptr).is_number()) {
            throw ParseError("sweep path is not a numeric field: " + dotted_path);
        }
        root[ptr] = value;
    } catch (const json::exception&) {
        throw ParseError("invalid sweep path: " + dotted_path);
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid sweep path: " + dotted_path);
    }
}

} // namespace xrperf

#endif // XRPERF_JSON_IO_HPP
