#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "xrperf/ols.hpp"
#include "xrperf/regression.hpp"
#include "xrperf/simoracle.hpp"

using namespace xrperf;

namespace {

struct Synth {
    std::vector<std::vector<double>> rows;
    std::vector<double> target;
};

/// Noiseless observations of intercept + coeffs . features over a random grid.
Synth synthesize(double intercept, const std::vector<double>& coeffs, std::size_t n,
                 SplitMix64& rng, double lo = 0.0, double hi = 10.0) {
    Synth out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row;
        double y = intercept;
        for (double c : coeffs) {
            const double x = lo + (hi - lo) * rng.next_double();
            row.push_back(x);
            y += c * x;
        }
        out.rows.push_back(std::move(row));
        out.target.push_back(y);
    }
    return out;
}

void check_close(const LinearModel& got, double intercept, const std::vector<double>& coeffs,
                 double rel = 1e-6) {
    CHECK(std::abs(got.intercept - intercept) <= rel * std::max(1.0, std::abs(intercept)));
    REQUIRE(got.coefficients.size() == coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        CHECK(std::abs(got.coefficients[i] - coeffs[i]) <=
              rel * std::max(1.0, std::abs(coeffs[i])));
    }
}

} // namespace

TEST_CASE("round-trips the published coefficient sets from noiseless data") {
    SplitMix64 rng(0x5eedULL);
    const CoefficientSet& paper = paper_coefficients();
    const struct {
        const LinearModel* model;
        double lo, hi;
    } cases[] = {
        {&paper.compute_cpu, 0.5, 3.5},
        {&paper.power_gpu, 0.5, 3.5},
        {&paper.encoding, 0.0, 60.0},
        {&paper.cnn, 0.0, 250.0},
    };
    for (const auto& c : cases) {
        const Synth data =
            synthesize(c.model->intercept, c.model->coefficients, 64, rng, c.lo, c.hi);
        const LinearModel fit =
            fit_linear_model(data.rows, data.target, c.model->feature_names);
        check_close(fit, c.model->intercept, c.model->coefficients);
        REQUIRE(fit.r_squared.has_value());
        CHECK(*fit.r_squared == Catch::Approx(1.0).margin(1e-9));
    }
}

TEST_CASE("fits through the table interface with a named target") {
    SplitMix64 rng(7u);
    const Synth data = synthesize(2.45, {0.0025, 0.03, 0.0029}, 40, rng, 0.0, 200.0);
    ObservationTable table;
    table.columns = {"d", "s", "scale", "t"};
    for (std::size_t i = 0; i < data.rows.size(); ++i) {
        auto row = data.rows[i];
        row.push_back(data.target[i]);
        table.rows.push_back(std::move(row));
    }
    const LinearModel fit = fit_linear_model(table, "t");
    check_close(fit, 2.45, {0.0025, 0.03, 0.0029});
    CHECK(fit.feature_names == std::vector<std::string>{"d", "s", "scale"});

    CHECK_THROWS_AS(fit_linear_model(table, "nope"), ParseError);
}

TEST_CASE("rejects rank-deficient designs") {
    // second column is an exact multiple of the first
    std::vector<std::vector<double>> rows;
    std::vector<double> target;
    for (int i = 0; i < 12; ++i) {
        const double x = 1.0 + i;
        rows.push_back({x, 2.0 * x});
        target.push_back(3.0 + x);
    }
    CHECK_THROWS_AS(fit_linear_model(rows, target, {"a", "b"}), RankDeficient);
}

TEST_CASE("rejects underdetermined systems") {
    CHECK_THROWS_AS(
        fit_linear_model({{1.0, 2.0}, {2.0, 1.0}}, {1.0, 2.0}, {"a", "b"}),
        InsufficientData);
}

TEST_CASE("zero-variance target fits a constant with unit quality") {
    std::vector<std::vector<double>> rows;
    std::vector<double> target;
    for (int i = 0; i < 10; ++i) {
        rows.push_back({static_cast<double>(i)});
        target.push_back(5.0);
    }
    const LinearModel fit = fit_linear_model(rows, target, {"x"});
    CHECK(fit.intercept == Catch::Approx(5.0).margin(1e-9));
    CHECK(fit.coefficients[0] == Catch::Approx(0.0).margin(1e-9));
    REQUIRE(fit.r_squared.has_value());
    CHECK(*fit.r_squared == 1.0);
}

TEST_CASE("noisy data keeps the quality measure inside [0,1]") {
    SplitMix64 rng(99u);
    Synth data = synthesize(1.0, {2.0}, 200, rng);
    for (auto& y : data.target) y += 0.1 * (rng.next_double() - 0.5);
    const LinearModel fit = fit_linear_model(data.rows, data.target, {"x"});
    REQUIRE(fit.r_squared.has_value());
    CHECK(*fit.r_squared <= 1.0);
    CHECK(*fit.r_squared >= 0.99);  // weak noise on a strong signal
    check_close(fit, 1.0, {2.0}, 0.02);
}

TEST_CASE("row order does not change the solution") {
    SplitMix64 rng(1234u);
    const Synth data = synthesize(-5.0, {0.5, -1.5, 4.0}, 50, rng);
    const LinearModel a = fit_linear_model(data.rows, data.target, {"x1", "x2", "x3"});

    std::vector<std::vector<double>> rows(data.rows.rbegin(), data.rows.rend());
    std::vector<double> target(data.target.rbegin(), data.target.rend());
    const LinearModel b = fit_linear_model(rows, target, {"x1", "x2", "x3"});

    CHECK(a.intercept == Catch::Approx(b.intercept).margin(1e-9));
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
        CHECK(a.coefficients[i] == Catch::Approx(b.coefficients[i]).margin(1e-9));
    }
}

TEST_CASE("ill-conditioned but full-rank designs fall back cleanly") {
    // nearly collinear columns: x2 = x1 + tiny independent wiggle
    SplitMix64 rng(5u);
    std::vector<std::vector<double>> rows;
    std::vector<double> target;
    for (int i = 0; i < 60; ++i) {
        const double x1 = rng.next_double();
        const double x2 = x1 + 1e-4 * rng.next_double();
        rows.push_back({x1, x2});
        target.push_back(1.0 + 2.0 * x1 + 3.0 * x2);
    }
    const LinearModel fit = fit_linear_model(rows, target, {"x1", "x2"});
    // prediction quality is what survives ill-conditioning
    REQUIRE(fit.r_squared.has_value());
    CHECK(*fit.r_squared == Catch::Approx(1.0).margin(1e-6));
}
