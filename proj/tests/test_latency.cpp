#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "support/scenario_builder.hpp"
#include "xrperf/latency.hpp"

using namespace xrperf;

namespace {
FrameConfig worked_frames() {
    FrameConfig f;
    f.frame_rate = 30.0;
    f.frame_area = 2.0;
    f.frame_bytes = 3.0;
    return f;
}
} // namespace

TEST_CASE("frame generation is period plus compute plus memory") {
    // 1/30 + 2.0/20 + 3.0/10000
    const double got = frame_generation(worked_frames(), 20.0, 10000.0);
    CHECK(got == Catch::Approx(1.0 / 30.0 + 0.1 + 0.0003).margin(1e-15));
    CHECK(got == Catch::Approx(0.13363333333333333).margin(1e-12));
}

TEST_CASE("volumetric generation drops the period term") {
    VolumetricConfig vol{1.0, 2.0};
    CHECK(volumetric_generation(vol, 20.0, 10000.0) ==
          Catch::Approx(1.0 / 20.0 + 2.0 / 10000.0).margin(1e-15));
    CHECK(volumetric_generation(vol, 20.0, 10000.0) == Catch::Approx(0.0502).margin(1e-12));
}

TEST_CASE("external sensing accumulates updates and takes the slowest sensor") {
    SensorProfile a{"a", 100.0, 300.0, {}, 0.0};
    const SensorProfile sensors1[] = {a};
    CHECK(external_sensor_latency(sensors1, 1, 3.0e8) ==
          Catch::Approx(0.01 + 300.0 / 3.0e8).margin(1e-15));
    CHECK(external_sensor_latency(sensors1, 1, 3.0e8) == Catch::Approx(0.010001).margin(1e-12));

    SensorProfile b{"b", 200.0, 0.0, {}, 0.0};
    const SensorProfile sensors2[] = {a, b};
    // a over 2 updates: 2*(0.01 + 1e-6) = 0.020002; b: 2*0.005 = 0.01
    CHECK(external_sensor_latency(sensors2, 2, 3.0e8) ==
          Catch::Approx(0.020002).margin(1e-12));

    CHECK(external_sensor_latency({}, 3, 3.0e8) == 0.0);
}

TEST_CASE("per-update distances honor the configured series") {
    SensorProfile s{"s", 100.0, 0.0, {300.0, 600.0}, 0.0};
    const SensorProfile sensors[] = {s};
    // updates at d=300 then d=600, third update holds 600
    const double expect =
        3 * 0.01 + (300.0 + 600.0 + 600.0) / 3.0e8;
    CHECK(external_sensor_latency(sensors, 3, 3.0e8) == Catch::Approx(expect).margin(1e-15));
}

TEST_CASE("buffering sums stable queues and rejects unstable ones") {
    BufferSet buffers;
    buffers.frame = {50.0, 100.0};
    buffers.volumetric = {50.0, 100.0};
    buffers.external = {50.0, 100.0};
    CHECK(buffering_delay(buffers) == Catch::Approx(0.06).margin(1e-15));

    buffers.volumetric = {100.0, 100.0};
    CHECK_THROWS_AS(buffering_delay(buffers), UnstableQueue);
}

TEST_CASE("rendering adds buffering and the gated delivery term") {
    OffloadPlan local;
    local.local_flag = 1;
    local.local_result_latency = 0.001;
    // 2/20 + 3/10000 + 0.02 + 0.001 (remote delivery argument ignored when local)
    CHECK(rendering_latency(worked_frames(), 20.0, 10000.0, 0.02, local, 0.5) ==
          Catch::Approx(0.1213).margin(1e-12));

    OffloadPlan remote;
    remote.local_flag = 0;
    CHECK(rendering_latency(worked_frames(), 20.0, 10000.0, 0.02, remote, 0.001) ==
          Catch::Approx(0.1213).margin(1e-12));
}

TEST_CASE("conversion is rendering without buffering or delivery") {
    CHECK(frame_conversion(worked_frames(), 20.0, 10000.0) ==
          Catch::Approx(0.1003).margin(1e-12));
}

TEST_CASE("encoding divides the fitted numerator by the allocated resource") {
    FrameConfig frames = worked_frames();
    frames.frame_area = 0.0;  // leaves only the frame-rate regressor active
    const EncoderConfig enc{0.0, 0.0, 0.0, 0.0, 1.0, 1.0, kDefaultDecodeDiscount};
    const double got = encoding_latency(enc, frames, 13.56, 10000.0);
    // numerator 4335.14 is milliseconds once divided by the resource
    CHECK(got == Catch::Approx((4335.14 / 13.56) / 1000.0 + 0.0003).margin(1e-12));
    CHECK(got == Catch::Approx(0.32000058997050157).margin(1e-12));
}

TEST_CASE("negative encoding numerators clamp to the memory term") {
    FrameConfig frames = worked_frames();
    frames.frame_rate = 0.1;
    frames.frame_area = 0.0;
    const EncoderConfig enc{0.0, 0.0, 0.0, 0.0, 1.0, 1.0, kDefaultDecodeDiscount};
    WarningList warnings;
    const double got = encoding_latency(enc, frames, 13.56, 10000.0, paper_coefficients(),
                                        &warnings);
    CHECK(got == Catch::Approx(0.0003).margin(1e-15));
    CHECK(warnings.size() == 1);
}

TEST_CASE("local inference scales with the client share") {
    FrameConfig frames;
    frames.converted_area = 1.0;
    frames.converted_bytes = 1.5;
    const CnnProfile cnn{31.0, 16.9, 0.0};  // complexity 3.0345
    OffloadPlan plan;
    plan.client_share = 1.0;
    const double full = local_inference(frames, 13.56, 3000.0, cnn, plan);
    CHECK(full == Catch::Approx(1.0 / (13.56 * 3.0345) + 1.5 / 3000.0).margin(1e-12));

    plan.client_share = 0.25;
    CHECK(local_inference(frames, 13.56, 3000.0, cnn, plan) ==
          Catch::Approx(0.25 * full).margin(1e-15));
}

TEST_CASE("decoding is the discounted encode cost rescaled by edge compute") {
    CHECK(decoding_latency(0.3, 1.0, 11.76, 1.0 / 3.0) ==
          Catch::Approx(0.3 * (1.0 / 3.0) / 11.76).margin(1e-15));
    CHECK(decoding_latency(0.3, 1.0, 11.76, 1.0 / 3.0) ==
          Catch::Approx(0.008503401360544217).margin(1e-12));
}

TEST_CASE("edge compute defaults to the fixed client multiple") {
    EdgeProfile edge;
    CHECK(edge_compute(edge, 13.56) == Catch::Approx(11.76 * 13.56).margin(1e-12));
    edge.compute = 42.0;
    CHECK(edge_compute(edge, 13.56) == 42.0);
}

TEST_CASE("remote inference follows the worked single-edge case") {
    FrameConfig frames;
    frames.encoded_area = 1.0;
    frames.encoded_bytes = 0.5;
    EdgeProfile edge;
    edge.compute = 11.76;
    edge.memory_bandwidth = 1.0e5;
    edge.cnn = {106.0, 210.0, 0.0};  // complexity 9.015
    const EdgeProfile edges[] = {edge};
    OffloadPlan plan;
    plan.local_flag = 0;
    plan.edge_shares = {1.0};

    // share * (s/(c*C) + bytes/m + L_dec) with L_dec built from l_en=0.3, c_client=1
    const double l_dec = 0.3 * 1.0 * (1.0 / 3.0) / 11.76;
    const double expect = 1.0 / (11.76 * 9.015) + 0.5 / 1.0e5 + l_dec;
    CHECK(remote_inference(frames, edges, plan, 0.3, 1.0, 1.0 / 3.0) ==
          Catch::Approx(expect).margin(1e-15));

    CHECK_THROWS_AS(remote_inference(frames, {}, plan, 0.3, 1.0, 1.0 / 3.0),
                    NoEdgeConfigured);
}

TEST_CASE("idle edges never gate remote inference") {
    FrameConfig frames;
    frames.encoded_area = 1.0;
    frames.encoded_bytes = 0.5;
    EdgeProfile fast;
    fast.compute = 200.0;
    fast.memory_bandwidth = 1.0e5;
    fast.cnn = {53.0, 98.0, 0.0};
    EdgeProfile slow;
    slow.compute = 1.0;
    slow.memory_bandwidth = 1.0e3;
    slow.cnn = {106.0, 210.0, 0.0};

    OffloadPlan active;
    active.local_flag = 0;
    active.edge_shares = {1.0};
    const EdgeProfile one[] = {fast};
    const double base = remote_inference(frames, one, active, 0.3, 1.0, 1.0 / 3.0);

    OffloadPlan with_idle = active;
    with_idle.edge_shares = {1.0, 0.0};
    const EdgeProfile two[] = {fast, slow};
    CHECK(remote_inference(frames, two, with_idle, 0.3, 1.0, 1.0 / 3.0) == base);
}

TEST_CASE("transmission combines serialization and propagation") {
    NetworkProfile net;
    net.throughput = 80.0;
    CHECK(transmission_latency(1.0, net, 100.0) ==
          Catch::Approx(0.10000033333333334).margin(1e-15));
    CHECK(handoff_latency({80.0, 3.0e8, 0.05, 0.1, 0.0, 0.0}) ==
          Catch::Approx(0.005).margin(1e-15));

    NetworkProfile coop;
    coop.throughput = 80.0;
    coop.coop_distance = 50.0;
    coop.coop_bytes = 0.5;
    CHECK(cooperation_latency(coop) == Catch::Approx(0.05000016666666667).margin(1e-15));
}

TEST_CASE("round trip uses the farthest active edge") {
    ScenarioSpec spec = testing::base_remote_scenario();
    spec.edges.push_back(spec.edges[0]);
    spec.edges[1].distance = 5000.0;
    spec.offload.edge_shares = {1.0, 0.0};  // distant edge is idle
    CHECK(active_edge_distance(spec.edges, spec.offload) == 100.0);

    const double rt = round_trip_transmission(spec);
    const double expect = units::transfer_seconds(1.0, 80.0) + 100.0 / 3.0e8 +
                          units::transfer_seconds(0.01, 80.0) + 100.0 / 3.0e8;
    CHECK(rt == Catch::Approx(expect).margin(1e-15));
}

TEST_CASE("composition gates the offload-dependent segments") {
    const ScenarioSpec local = testing::base_local_scenario();
    const LatencyBreakdown l = compose_frame_latency(local, 1);
    CHECK(l.fc > 0.0);
    CHECK(l.loc > 0.0);
    CHECK(l.en == 0.0);
    CHECK(l.rem == 0.0);
    CHECK(l.tr == 0.0);
    CHECK(l.ho == 0.0);
    CHECK(l.total == Catch::Approx(l.sum_of_segments()).margin(1e-18));

    const ScenarioSpec remote = testing::base_remote_scenario();
    const LatencyBreakdown r = compose_frame_latency(remote, 1);
    CHECK(r.fc == 0.0);
    CHECK(r.loc == 0.0);
    CHECK(r.en > 0.0);
    CHECK(r.rem > 0.0);
    CHECK(r.tr > 0.0);
    CHECK(r.ho > 0.0);
}

TEST_CASE("composition includes local delivery inside rendering") {
    ScenarioSpec spec = testing::base_local_scenario();
    const double base = compose_frame_latency(spec, 1).ren;
    spec.offload.local_result_latency += 0.005;
    CHECK(compose_frame_latency(spec, 1).ren == Catch::Approx(base + 0.005).margin(1e-15));
}

TEST_CASE("cooperation joins the total only when requested") {
    ScenarioSpec spec = testing::base_remote_scenario();
    spec.network.coop_distance = 50.0;
    spec.network.coop_bytes = 0.5;
    spec.offload.include_coop = false;
    const LatencyBreakdown off = compose_frame_latency(spec, 1);
    CHECK(off.coop == 0.0);

    spec.offload.include_coop = true;
    const LatencyBreakdown on = compose_frame_latency(spec, 1);
    CHECK(on.coop == Catch::Approx(0.05000016666666667).margin(1e-12));
    CHECK(on.total == Catch::Approx(off.total + on.coop).margin(1e-12));
}

TEST_CASE("every segment of a composed breakdown is nonnegative") {
    SplitMix64 rng(77u);
    for (int i = 0; i < 60; ++i) {
        const ScenarioSpec spec = testing::random_scenario(rng, i % 2 == 0);
        const LatencyBreakdown b = compose_frame_latency(spec, 1);
        for (int s = 0; s < kSegmentCount; ++s) {
            INFO(spec.name << " segment " << segment_name(static_cast<Segment>(s)));
            CHECK(b.segment(static_cast<Segment>(s)) >= 0.0);
        }
        CHECK(b.total >= 0.0);
    }
}
