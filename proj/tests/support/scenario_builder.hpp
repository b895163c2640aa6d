#ifndef XRPERF_TESTS_SCENARIO_BUILDER_HPP
#define XRPERF_TESTS_SCENARIO_BUILDER_HPP

// Deterministic scenario factories for the property suites. The random
// builder keeps every draw inside the validator's accepted ranges so a
// generated scenario always evaluates.

#include <string>

#include "xrperf/scenario.hpp"
#include "xrperf/simoracle.hpp"

namespace xrperf::testing {

inline ScenarioSpec base_local_scenario() {
    ScenarioSpec s;
    s.name = "test-local";
    s.device.allocation = {2.0, 1.0, 1.0};
    s.device.memory_bandwidth = 3000.0;
    s.device.cnn = {31.0, 16.9, 0.0};
    s.device.wait_power = 0.5;
    s.device.base_power = 0.0;
    s.device.thermal_fraction = 0.05;
    s.network.throughput = 80.0;
    s.network.handoff_latency = 0.05;
    s.network.handoff_probability = 0.1;
    s.sensors.push_back({"imu", 100.0, 300.0, {}, 0.0});
    s.encoder = {30.0, 2.0, 10.0, 28.0, 1.0, 1.0, kDefaultDecodeDiscount};
    s.frames.frame_rate = 30.0;
    s.frames.frame_area = 2.0;
    s.frames.frame_bytes = 3.0;
    s.frames.converted_area = 1.0;
    s.frames.converted_bytes = 1.5;
    s.frames.encoded_area = 2.0;
    s.frames.encoded_bytes = 1.0;
    s.frames.frame_count = 3;
    s.frames.updates_per_frame = 2;
    s.volumetric = {1.0, 2.0};
    s.buffer.frame = {50.0, 100.0};
    s.buffer.volumetric = {50.0, 100.0};
    s.buffer.external = {50.0, 100.0};
    s.offload.local_flag = 1;
    s.offload.client_share = 1.0;
    s.offload.task_total = 1.0;
    s.offload.local_result_latency = 0.001;
    return s;
}

inline ScenarioSpec base_remote_scenario() {
    ScenarioSpec s = base_local_scenario();
    s.name = "test-remote";
    EdgeProfile edge;
    edge.memory_bandwidth = 100000.0;
    edge.cnn = {106.0, 210.0, 0.0};
    edge.task_share = 1.0;
    edge.distance = 100.0;
    s.edges.push_back(edge);
    s.offload.local_flag = 0;
    s.offload.client_share = 0.0;
    s.offload.edge_shares = {1.0};
    s.offload.task_total = 1.0;
    s.offload.result_bytes = 0.01;
    return s;
}

/// Uniform draw in [lo, hi) from the shared deterministic generator.
inline double uniform(SplitMix64& rng, double lo, double hi) {
    return lo + (hi - lo) * rng.next_double();
}

inline ScenarioSpec random_scenario(SplitMix64& rng, bool local) {
    ScenarioSpec s;
    s.name = local ? "random-local" : "random-remote";

    s.frames.frame_rate = uniform(rng, 20.0, 90.0);
    s.frames.frame_area = uniform(rng, 0.5, 4.0);
    s.frames.frame_bytes = uniform(rng, 1.0, 6.0);
    s.frames.converted_area = uniform(rng, 0.5, 4.0);
    s.frames.converted_bytes = uniform(rng, 0.5, 6.0);
    s.frames.encoded_area = s.frames.frame_area;
    s.frames.encoded_bytes = uniform(rng, 0.05, s.frames.frame_bytes);
    s.frames.frame_count = 1 + static_cast<std::int64_t>(rng.next() % 3);
    s.frames.updates_per_frame = 1 + static_cast<int>(rng.next() % 4);

    s.device.allocation.cpu_clock = uniform(rng, 1.0, 3.0);
    s.device.allocation.gpu_clock = uniform(rng, 0.8, 3.0);
    s.device.allocation.cpu_share = uniform(rng, 0.0, 1.0);
    s.device.memory_bandwidth = uniform(rng, 2000.0, 20000.0);
    s.device.cnn = {uniform(rng, 10.0, 120.0), uniform(rng, 5.0, 250.0), 0.0};
    s.device.wait_power = uniform(rng, 0.1, 1.0);
    s.device.base_power = uniform(rng, 0.0, 2.0);
    s.device.thermal_fraction = uniform(rng, 0.0, 0.2);

    s.network.throughput = uniform(rng, 40.0, 200.0);
    s.network.handoff_latency = uniform(rng, 0.0, 0.05);
    s.network.handoff_probability = uniform(rng, 0.0, 1.0);
    s.network.coop_distance = uniform(rng, 10.0, 500.0);
    s.network.coop_bytes = uniform(rng, 0.01, 1.0);

    const int n_sensors = static_cast<int>(rng.next() % 4);
    for (int m = 0; m < n_sensors; ++m) {
        SensorProfile sensor;
        sensor.id = "s" + std::to_string(m);
        sensor.gen_frequency = uniform(rng, 50.0, 400.0);
        sensor.distance = uniform(rng, 0.0, 1000.0);
        s.sensors.push_back(std::move(sensor));
    }

    s.encoder.i_interval = uniform(rng, 0.0, 60.0);
    s.encoder.b_interval = uniform(rng, 0.0, 16.0);
    s.encoder.bitrate = uniform(rng, 1.0, 60.0);
    s.encoder.quantization = uniform(rng, 10.0, 51.0);
    s.encoder.output_bytes = s.frames.encoded_bytes;
    s.encoder.decode_discount = kDefaultDecodeDiscount;

    s.volumetric = {uniform(rng, 0.2, 3.0), uniform(rng, 0.2, 4.0)};

    for (BufferConfig* b : {&s.buffer.frame, &s.buffer.volumetric, &s.buffer.external}) {
        b->arrival_rate = uniform(rng, 20.0, 80.0);
        b->service_rate = b->arrival_rate + uniform(rng, 10.0, 100.0);
    }

    if (local) {
        s.offload.local_flag = 1;
        s.offload.client_share = 1.0;
        s.offload.edge_shares.clear();
        s.offload.task_total = 1.0;
        s.offload.local_result_latency = uniform(rng, 0.0, 0.01);
    } else {
        s.offload.local_flag = 0;
        const int n_edges = 1 + static_cast<int>(rng.next() % 3);
        double sum = s.offload.client_share = uniform(rng, 0.0, 0.5);
        for (int e = 0; e < n_edges; ++e) {
            EdgeProfile edge;
            if (rng.next() % 2) edge.compute = uniform(rng, 20.0, 400.0);
            edge.memory_bandwidth = uniform(rng, 5.0e4, 5.0e5);
            edge.cnn = {uniform(rng, 10.0, 120.0), uniform(rng, 5.0, 250.0), 0.0};
            edge.distance = uniform(rng, 10.0, 2000.0);
            const double share = uniform(rng, 0.0, 1.0);
            edge.task_share = share;
            s.edges.push_back(edge);
            s.offload.edge_shares.push_back(share);
            sum += share;
        }
        s.offload.task_total = sum;
        s.offload.result_bytes = uniform(rng, 0.001, 0.05);
        s.offload.include_coop = rng.next() % 2 == 0;
    }
    return s;
}

} // namespace xrperf::testing

#endif // XRPERF_TESTS_SCENARIO_BUILDER_HPP
