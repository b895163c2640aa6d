// xrpm: scenario-driven XR pipeline performance model.
// Exit codes: 0 success, 1 I/O or parse failure, 2 validation/model error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11/CLI11.hpp>

#include "xrperf/xrperf.hpp"

namespace fs = std::filesystem;
using namespace xrperf;

namespace {

struct CommonArgs {
    std::string scenario;
    std::string out_dir = "out";
    std::string coefficients = "paper";
    std::string frames;
    std::uint64_t seed = 1;
};

fs::path resolve_out_dir(const std::string& flag_value) {
    const char* env = std::getenv("XRPM_OUT");
    fs::path dir = (env && *env) ? fs::path(env) : fs::path(flag_value);
    fs::create_directories(dir);
    return dir;
}

std::ofstream open_output(const fs::path& dir, const std::string& name) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw ParseError("cannot write output file: " + (dir / name).string());
    return out;
}

std::pair<std::int64_t, std::int64_t> parse_frame_range(const std::string& text,
                                                        std::int64_t default_end) {
    if (text.empty()) return {1, default_end};
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::int64_t single = std::stoll(text);
            return {single, single};
        }
        const std::int64_t a = std::stoll(text.substr(0, dots));
        const std::int64_t b = std::stoll(text.substr(dots + 2));
        if (a < 1 || b < a) throw ParseError("bad frame range: " + text);
        return {a, b};
    } catch (const std::invalid_argument&) {
        throw ParseError("bad frame range: " + text);
    } catch (const std::out_of_range&) {
        throw ParseError("bad frame range: " + text);
    }
}

int cmd_evaluate(const CommonArgs& args) {
    const ScenarioSpec spec = load_scenario(args.scenario);
    const CoefficientSet coeffs = resolve_coefficients(args.coefficients);
    const auto [begin, end] = parse_frame_range(args.frames, spec.frames.frame_count);
    const EvaluationResult result = run_evaluation(spec, begin, end, coeffs);

    const fs::path dir = resolve_out_dir(args.out_dir);
    { auto f = open_output(dir, "latency.csv"); write_latency_csv(f, result); }
    { auto f = open_output(dir, "energy.csv"); write_energy_csv(f, result); }
    { auto f = open_output(dir, "aoi_samples.csv"); write_aoi_samples_csv(f, result); }
    { auto f = open_output(dir, "aoi_summary.csv"); write_aoi_summary_csv(f, result); }
    { auto f = open_output(dir, "summary.txt"); write_summary(f, spec, result); }
    write_summary(std::cout, spec, result);
    return 0;
}

int cmd_sweep(const CommonArgs& args, const std::string& param, std::vector<double> values,
              double from, double to, double step, bool have_range) {
    if (have_range) {
        if (step <= 0.0) throw ParseError("sweep step must be > 0");
        for (double v = from; v <= to + step * 1e-9; v += step) values.push_back(v);
    }
    if (values.empty()) throw ParseError("sweep value list is empty");

    std::ifstream in(args.scenario);
    if (!in) throw ParseError("cannot open scenario file: " + args.scenario);
    json root;
    try {
        in >> root;
    } catch (const json::exception& e) {
        throw ParseError("scenario '" + args.scenario + "' is not valid JSON: " + e.what());
    }

    const CoefficientSet coeffs = resolve_coefficients(args.coefficients);
    const auto points = run_sweep(root, param, std::move(values), coeffs);

    const fs::path dir = resolve_out_dir(args.out_dir);
    { auto f = open_output(dir, "sweep.csv"); write_sweep_csv(f, param, points); }
    std::cout << "swept " << param << " over " << points.size() << " values -> "
              << (dir / "sweep.csv").string() << "\n";
    return 0;
}

int cmd_simulate(const CommonArgs& args, const std::string& mode, std::int64_t horizon,
                 const std::string& sojourn) {
    const ScenarioSpec spec = load_scenario(args.scenario);
    const fs::path dir = resolve_out_dir(args.out_dir);

    if (mode == "mm1") {
        const auto rows = run_mm1_comparison(spec, horizon, args.seed);
        { auto f = open_output(dir, "mm1_comparison.csv"); write_mm1_csv(f, rows); }
        {
            auto f = open_output(dir, "simulate_stats.json");
            f << mm1_stats_json(rows, args.seed).dump(2) << '\n';
        }
        for (const auto& r : rows) {
            std::cout << r.buffer_name << ": analytic " << format_value(r.analytic_sojourn, 4)
                      << " s, simulated " << format_value(r.simulated_sojourn, 4)
                      << " s, rel err " << format_value(r.rel_error, 4) << "\n";
        }
        return 0;
    }
    if (mode == "aoi") {
        const SojournMode sm =
            sojourn == "stochastic" ? SojournMode::Stochastic : SojournMode::Fixed;
        const CoefficientSet coeffs = resolve_coefficients(args.coefficients);
        const AoiComparison cmp = run_aoi_comparison(spec, args.seed, sm, coeffs);
        { auto f = open_output(dir, "aoi_comparison.csv"); write_aoi_comparison_csv(f, cmp); }
        {
            auto f = open_output(dir, "simulate_stats.json");
            f << aoi_stats_json(cmp, args.seed, sm).dump(2) << '\n';
        }
        std::cout << "aoi samples: " << cmp.rows.size() << ", max abs deviation "
                  << format_value(cmp.max_abs_deviation_s, 4) << " s\n";
        return 0;
    }
    throw ParseError("unknown simulate mode: " + mode);
}

int cmd_fit(const std::string& csv_path, const std::string& target,
            const std::string& register_as, const std::string& registry) {
    const ObservationTable table = read_observations_file(csv_path);
    const LinearModel model = fit_linear_model(table, target);

    std::cout << "target: " << target << "\n";
    std::cout << "intercept: " << format_value(model.intercept, 12) << "\n";
    for (std::size_t i = 0; i < model.coefficients.size(); ++i) {
        std::cout << "coef " << model.feature_names[i] << ": "
                  << format_value(model.coefficients[i], 12) << "\n";
    }
    std::cout << "r_squared: " << format_value(model.r_squared.value_or(0.0), 12) << "\n";

    if (!register_as.empty()) {
        register_model(model, register_as, registry);
        std::cout << "registered as '" << register_as << "' in " << registry << "\n";
    }
    return 0;
}

int cmd_validate(const CommonArgs& args) {
    const ScenarioSpec spec = load_scenario(args.scenario);
    const CoefficientSet coeffs = resolve_coefficients(args.coefficients);
    const ValidationReport report = validate_scenario(spec, coeffs);
    for (const auto& v : report.violations) {
        std::cout << (v.severity == Severity::Error ? "error" : "warning") << " [" << v.field
                  << "] " << v.message << "\n";
    }
    std::cout << "errors: " << report.error_count() << ", warnings: " << report.warning_count()
              << "\n";
    return report.ok() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"xrpm: XR pipeline latency/energy/freshness model"};
    app.require_subcommand(1);

    CommonArgs args;
    const auto add_common = [&](CLI::App* sub, bool need_scenario) {
        if (need_scenario) {
            sub->add_option("--scenario", args.scenario, "scenario JSON file")->required();
        }
        sub->add_option("--out", args.out_dir, "output directory (env XRPM_OUT overrides)");
        sub->add_option("--seed", args.seed, "RNG seed");
        sub->add_option("--frames", args.frames, "frame range a..b (default: full range)");
        sub->add_option("--coefficients", args.coefficients,
                        "coefficient set: 'paper' or a registry file path");
    };

    auto* evaluate = app.add_subcommand("evaluate", "closed-form breakdown for a scenario");
    add_common(evaluate, true);

    auto* sweep = app.add_subcommand("sweep", "re-evaluate while varying one parameter");
    add_common(sweep, true);
    std::string sweep_param;
    std::vector<double> sweep_values;
    double sweep_from = 0.0, sweep_to = 0.0, sweep_step = 0.0;
    sweep->add_option("--param", sweep_param, "dotted scenario path, e.g. offload.client_share")
        ->required();
    auto* values_opt =
        sweep->add_option("--values", sweep_values, "comma-separated values")->delimiter(',');
    auto* from_opt = sweep->add_option("--from", sweep_from, "range start");
    sweep->add_option("--to", sweep_to, "range end")->needs(from_opt);
    sweep->add_option("--step", sweep_step, "range step")->needs(from_opt);
    from_opt->excludes(values_opt);

    auto* simulate = app.add_subcommand("simulate", "event-driven oracle vs analytic model");
    add_common(simulate, true);
    std::string sim_mode;
    std::int64_t sim_horizon = 200000;
    std::string sim_sojourn = "fixed";
    simulate->add_option("--mode", sim_mode, "mm1 or aoi")->required();
    simulate->add_option("--horizon", sim_horizon, "customers per queue (mm1 mode)");
    simulate->add_option("--sojourn", sim_sojourn, "aoi buffering: fixed or stochastic")
        ->check(CLI::IsMember({"fixed", "stochastic"}));

    auto* fit = app.add_subcommand("fit", "least-squares fit from an observation CSV");
    add_common(fit, false);
    std::string fit_csv, fit_target, fit_register, fit_registry;
    fit->add_option("--csv", fit_csv, "observation table (header + numeric rows)")->required();
    fit->add_option("--target", fit_target, "target column name")->required();
    auto* reg_opt = fit->add_option("--register-as", fit_register,
                                    "store the fit under this model role");
    fit->add_option("--registry", fit_registry, "coefficient registry file")->needs(reg_opt);
    reg_opt->needs(fit->get_option("--registry"));

    auto* validate = app.add_subcommand("validate", "check a scenario, report every finding");
    add_common(validate, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (evaluate->parsed()) return cmd_evaluate(args);
        if (sweep->parsed()) {
            return cmd_sweep(args, sweep_param, sweep_values, sweep_from, sweep_to, sweep_step,
                             from_opt->count() > 0);
        }
        if (simulate->parsed()) return cmd_simulate(args, sim_mode, sim_horizon, sim_sojourn);
        if (fit->parsed()) return cmd_fit(fit_csv, fit_target, fit_register, fit_registry);
        if (validate->parsed()) return cmd_validate(args);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
