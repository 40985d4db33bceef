// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: runs scenarios through the centralized or distributed
// solver, evaluates two-robot scan surfaces, and reproduces the noise-sweep
// table. Exit codes: 0 success, 2 parse error, 3 validation error, 4 runtime
// failure.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "minsinr/errors.hpp"
#include "minsinr/runner.hpp"

namespace {

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (const std::string& name : names) {
        if (!out.empty()) {
            out += ", ";
        }
        out += name;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Robotic router placement: min-SINR maximization toolkit"};
    app.require_subcommand(1);

    std::string scenario_arg;
    std::string mode_arg = "centralized";
    std::optional<std::uint64_t> seed;
    std::optional<long> iterations;
    std::string out_dir = "out";
    std::vector<int> robots;
    int samples = 101;

    const std::string scenario_help =
        "Scenario file path or built-in name (" + join_names(minsinr::builtin_scenario_names()) + ")";

    CLI::App* sim = app.add_subcommand("simulate", "Optimize one scenario and write trace + report");
    sim->add_option("--scenario", scenario_arg, scenario_help)->required();
    sim->add_option("--mode", mode_arg, "Solver: centralized|distributed")
        ->check(CLI::IsMember({"centralized", "distributed"}))
        ->capture_default_str();
    sim->add_option("--seed", seed, "Override the scenario seed");
    sim->add_option("--iterations", iterations, "Override the iteration budget");
    sim->add_option("--out", out_dir, "Output directory")->capture_default_str();

    CLI::App* scan = app.add_subcommand(
        "scan", "Evaluate the min-SINR surface over two robots' line parameters");
    scan->add_option("--scenario", scenario_arg, scenario_help)->required();
    scan->add_option("--robots", robots, "Two robot node ids, e.g. 2,5")
        ->required()
        ->delimiter(',');
    scan->add_option("--samples", samples, "Grid samples per axis")->capture_default_str();
    scan->add_option("--out", out_dir, "Output directory")->capture_default_str();

    CLI::App* table = app.add_subcommand(
        "table3", "Run the centralized solver over the shipped noise sweep");
    table->add_option("--seed", seed, "Base seed for the per-row substreams");
    table->add_option("--out", out_dir, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (sim->parsed()) {
        const minsinr::Scenario scenario = minsinr::resolve_scenario(scenario_arg);
        minsinr::SimulateOptions options;
        options.mode = mode_arg == "centralized" ? minsinr::RunMode::Centralized
                                                 : minsinr::RunMode::Distributed;
        options.seed = seed;
        options.iterations = iterations;
        options.out_dir = out_dir;
        const minsinr::RunReport report = minsinr::run_simulate(scenario, options);

        std::cout << "scenario " << report.scenario_name << " (" << mode_name(report.mode)
                  << ", seed " << report.seed << ")\n";
        std::cout << "iterations executed: " << report.iterations << '\n';
        if (report.mode == minsinr::RunMode::Distributed) {
            std::cout << "converged: " << (report.converged ? "yes" : "no") << '\n';
        }
        std::cout << "final global min SINR: "
                  << minsinr::format_sig12(report.final_global_cost) << '\n';
        const std::string stem =
            report.scenario_name + "_" + mode_name(report.mode);
        std::cout << "wrote " << (std::filesystem::path(out_dir) / (stem + "_trace.csv")).string()
                  << '\n';
        std::cout << "wrote "
                  << (std::filesystem::path(out_dir) / (stem + "_report.txt")).string() << '\n';
        return 0;
    }

    if (scan->parsed()) {
        if (robots.size() != 2) {
            throw minsinr::ValidationError("robots: expected exactly two node ids");
        }
        const minsinr::Scenario scenario = minsinr::resolve_scenario(scenario_arg);
        minsinr::ScanOptions options;
        options.robot_a = robots[0];
        options.robot_b = robots[1];
        options.samples = samples;
        options.out_dir = out_dir;
        const minsinr::ScanResult surface = minsinr::run_scan(scenario, options);

        const size_t maxima = minsinr::strict_interior_maxima(surface).size();
        std::cout << "scenario " << scenario.name << ": " << surface.samples << "x"
                  << surface.samples << " grid over robots " << surface.robot_a << " and "
                  << surface.robot_b << '\n';
        std::cout << "strict interior maxima: " << maxima << '\n';
        std::cout << "wrote "
                  << (std::filesystem::path(out_dir) / (scenario.name + "_scan.csv")).string()
                  << '\n';
        return 0;
    }

    minsinr::Table3Options options;
    options.seed = seed;
    options.out_dir = out_dir;
    const std::vector<minsinr::Table3Row> rows = minsinr::run_table3(options);
    std::cout << "noise    target    achieved     max_rel_err\n";
    for (const minsinr::Table3Row& row : rows) {
        std::printf("%-8.4g %-9.4g %-12.6g %.4g\n", row.noise, row.target, row.achieved,
                    row.max_rel_error);
    }
    std::cout << "wrote " << (std::filesystem::path(out_dir) / "table3.txt").string() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const minsinr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const minsinr::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
