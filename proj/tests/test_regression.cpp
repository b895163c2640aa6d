#include <catch2/catch_amalgamated.hpp>

#include "xrperf/regression.hpp"

using namespace xrperf;

namespace {
// Hand evaluations of the published coefficient sets, written out as plain
// arithmetic so the tests do not share code with the implementation.
double compute_cpu_oracle(double f) { return 18.24 + 1.84 * f * f - 6.02 * f; }
double compute_gpu_oracle(double f) { return 193.67 + 400.96 * f * f - 558.29 * f; }
double power_cpu_oracle(double f) { return 18.85 * f - 3.64 * f * f - 20.74; }
double power_gpu_oracle(double f) { return 187.48 * f - 135.11 * f * f - 62.197; }
double cnn_oracle(double d, double s, double scale) {
    return 2.45 + 0.0025 * d + 0.03 * s + 0.0029 * scale;
}
} // namespace

TEST_CASE("allocated compute matches the published fit") {
    CHECK(compute_resource({2.0, 1.0, 1.0}) == Catch::Approx(13.56).margin(1e-9));
    CHECK(compute_resource({2.0, 1.0, 1.0}) ==
          Catch::Approx(compute_cpu_oracle(2.0)).margin(1e-12));
    CHECK(compute_resource({2.0, 1.0, 0.0}) == Catch::Approx(36.34).margin(1e-9));
    CHECK(compute_resource({2.0, 1.0, 0.0}) ==
          Catch::Approx(compute_gpu_oracle(1.0)).margin(1e-12));
}

TEST_CASE("allocated compute mixes the branches convexly") {
    const double mixed = compute_resource({2.0, 1.0, 0.5});
    CHECK(mixed == Catch::Approx(0.5 * 13.56 + 0.5 * 36.34).margin(1e-9));

    // linear in the share at fixed clocks
    const double at25 = compute_resource({2.0, 1.0, 0.25});
    const double at75 = compute_resource({2.0, 1.0, 0.75});
    CHECK(at25 + at75 == Catch::Approx(2.0 * mixed).margin(1e-12));
}

TEST_CASE("allocated compute clamps its non-positive region") {
    // the GPU branch dips below zero between its two roots
    REQUIRE(compute_gpu_oracle(0.7) < 0.0);
    WarningList warnings;
    const double clamped = compute_resource({2.0, 0.7, 0.0}, paper_coefficients(), &warnings);
    CHECK(clamped == kComputeClampFloor);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("clamped") != std::string::npos);

    // the CPU branch has no real roots; it never clamps
    WarningList none;
    compute_resource({0.1, 1.0, 1.0}, paper_coefficients(), &none);
    CHECK(none.empty());
}

TEST_CASE("mean power matches the published fit") {
    CHECK(mean_power({2.84, 1.0, 1.0}) == Catch::Approx(power_cpu_oracle(2.84)).margin(1e-12));
    CHECK(mean_power({2.84, 1.0, 1.0}) == Catch::Approx(3.435216).margin(1e-9));
    CHECK(mean_power({2.0, 0.7, 0.0}) == Catch::Approx(power_gpu_oracle(0.7)).margin(1e-12));
    CHECK(mean_power({2.0, 0.7, 0.0}) == Catch::Approx(2.8351).margin(1e-9));
}

TEST_CASE("mean power clamps negative predictions to the base draw") {
    REQUIRE(power_gpu_oracle(1.0) < 0.0);  // -9.827
    WarningList warnings;
    const double p = mean_power({2.0, 1.0, 0.0}, 0.3, paper_coefficients(), &warnings);
    CHECK(p == 0.3);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("clamped") != std::string::npos);
}

TEST_CASE("cnn complexity matches the published fit") {
    CHECK(cnn_complexity({31.0, 16.9, 0.0}) == Catch::Approx(3.0345).margin(1e-9));
    CHECK(cnn_complexity({106.0, 210.0, 0.0}) == Catch::Approx(9.015).margin(1e-9));
    CHECK(cnn_complexity({0.0, 16.9, 1.4}) ==
          Catch::Approx(cnn_oracle(0.0, 16.9, 1.4)).margin(1e-12));
}

TEST_CASE("encoding numerator matches the published fit") {
    FrameConfig frames;
    frames.frame_rate = 30.0;
    frames.frame_area = 0.0;
    EncoderConfig enc{0.0, 0.0, 0.0, 0.0, 1.0, 1.0, kDefaultDecodeDiscount};
    CHECK(encoding_latency_raw(enc, frames) == Catch::Approx(4335.14).margin(1e-9));

    frames.frame_area = 230.0;
    enc = {30.0, 2.0, 10.0, 28.0, 1.0, 1.0, kDefaultDecodeDiscount};
    CHECK(encoding_latency_raw(enc, frames) == Catch::Approx(5353.12).margin(1e-9));

    // the calibration multiplier scales only the frame-size regressor
    enc.unit_scale = 2.0;
    CHECK(encoding_latency_raw(enc, frames) ==
          Catch::Approx(5353.12 + 1.43 * 230.0).margin(1e-9));
}

TEST_CASE("encoding numerator can go negative at tiny frame rates") {
    FrameConfig frames;
    frames.frame_rate = 0.1;
    frames.frame_area = 0.0;
    const EncoderConfig enc{0.0, 0.0, 0.0, 0.0, 1.0, 1.0, kDefaultDecodeDiscount};
    CHECK(encoding_latency_raw(enc, frames) ==
          Catch::Approx(-574.36 + 163.65 * 0.1).margin(1e-9));
}

TEST_CASE("linear model evaluation matches the dot product") {
    LinearModel m;
    m.intercept = 1.5;
    m.coefficients = {2.0, -3.0};
    m.feature_names = {"a", "b"};
    CHECK(m.evaluate({4.0, 1.0}) == Catch::Approx(1.5 + 8.0 - 3.0).margin(1e-15));
}

TEST_CASE("published registry carries the fit qualities") {
    const CoefficientSet& set = paper_coefficients();
    CHECK(set.name == "paper-v1");
    REQUIRE(set.compute_cpu.r_squared.has_value());
    CHECK(*set.compute_cpu.r_squared == Catch::Approx(0.87));
    CHECK(*set.power_cpu.r_squared == Catch::Approx(0.863));
    CHECK(*set.encoding.r_squared == Catch::Approx(0.79));
    CHECK(*set.cnn.r_squared == Catch::Approx(0.844));
}
