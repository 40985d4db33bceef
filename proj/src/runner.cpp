// SPDX-License-Identifier: Apache-2.0
#include "minsinr/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "minsinr/errors.hpp"

namespace minsinr {

namespace fs = std::filesystem;

const char* mode_name(RunMode mode) {
    return mode == RunMode::Centralized ? "centralized" : "distributed";
}

namespace {

void write_atomic(const fs::path& path,
                  const std::function<void(std::ostream&)>& writer) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) {
            throw Error("output: cannot open '" + tmp.string() + "' for writing");
        }
        writer(out);
        if (!out) {
            throw Error("output: write to '" + tmp.string() + "' failed");
        }
    }
    fs::rename(tmp, path);
}

void append_block(std::vector<TraceRow>& rows, long iteration, const NetworkState& state,
                  const std::vector<double>& flow_costs, double global, int node_count) {
    for (NodeId id = 1; id <= node_count; ++id) {
        const Position p = state.pos(id);
        rows.push_back({iteration, id, p.x, p.y, flow_costs, global});
    }
}

void write_report(const fs::path& path, const RunReport& report, const Topology& topo) {
    write_atomic(path, [&](std::ostream& out) {
        out << "scenario: " << report.scenario_name << '\n';
        out << "mode: " << mode_name(report.mode) << '\n';
        out << "seed: " << report.seed << '\n';
        out << "iterations: " << report.iterations << '\n';
        if (report.mode == RunMode::Distributed) {
            out << "converged: " << (report.converged ? "yes" : "no") << '\n';
        } else {
            out << "converged: n/a\n";
        }
        out << "final_global_min_sinr: " << format_sig12(report.final_global_cost) << '\n';
        for (size_t f = 0; f < report.final_flow_costs.size(); ++f) {
            out << "flow_min_sinr_" << (f + 1) << ": "
                << format_sig12(report.final_flow_costs[f]) << '\n';
        }
        for (size_t l = 0; l < report.final_link_sinrs.size(); ++l) {
            const Link& link = topo.links()[l];
            out << "link_sinr_" << link.flow_id << '_' << link.index << ": "
                << format_sig12(report.final_link_sinrs[l]) << '\n';
        }
        char wall[32];
        std::snprintf(wall, sizeof wall, "%.3f", report.wall_seconds);
        out << "wall_seconds: " << wall << '\n';
    });
}

} // namespace

RunReport run_simulate(const Scenario& scenario, const SimulateOptions& options) {
    if (options.trace_stride < 1) {
        throw ValidationError("trace_stride: must be >= 1");
    }
    const Topology topo = make_topology(scenario);
    const NetworkState start = initial_state(scenario);
    const std::uint64_t seed = options.seed.value_or(scenario.seed);
    const auto t_begin = std::chrono::steady_clock::now();

    RunReport report;
    report.scenario_name = scenario.name;
    report.mode = options.mode;
    report.seed = seed;

    std::vector<TraceRow> rows;
    const NetworkEvaluation initial_eval = evaluate_network(start, scenario.channel, topo);
    append_block(rows, 0, start, initial_eval.flow_costs, initial_eval.global,
                 topo.node_count());

    NetworkState final_state = start;
    if (options.mode == RunMode::Centralized) {
        AnnealingSchedule schedule = scenario.annealing;
        if (options.iterations) {
            schedule.iterations = *options.iterations;
        }
        const AnnealResult result =
            anneal(start, schedule, scenario.channel, topo, seed);
        for (size_t k = 0; k < result.steps.size(); ++k) {
            const long it = result.steps[k].iteration;
            if (it % options.trace_stride == 0 || it == schedule.iterations) {
                append_block(rows, it, result.states[k], result.flow_costs[k],
                             result.steps[k].global_cost, topo.node_count());
            }
        }
        final_state = result.best;
        report.iterations = schedule.iterations;
        report.converged = false;
    } else {
        ControllerParams ctrl = scenario.controller;
        if (options.iterations) {
            ctrl.max_iterations = *options.iterations;
        }
        const MobilityModel mobility = make_mobility(scenario);
        const DistributedResult result =
            run_distributed(start, scenario.channel, ctrl, mobility, topo, seed);
        for (const IterationRecord& rec : result.trace) {
            if (rec.iteration % options.trace_stride == 0 ||
                rec.iteration == result.iterations) {
                append_block(rows, rec.iteration, rec.state, rec.flow_costs, rec.global,
                             topo.node_count());
            }
        }
        final_state = result.final_state;
        report.iterations = result.iterations;
        report.converged = result.converged;
    }

    const NetworkEvaluation final_eval =
        evaluate_network(final_state, scenario.channel, topo);
    report.final_global_cost = final_eval.global;
    report.final_link_sinrs = final_eval.link_sinrs;
    report.final_flow_costs = final_eval.flow_costs;
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();

    fs::create_directories(options.out_dir);
    const std::string stem = scenario.name + "_" + mode_name(options.mode);
    write_atomic(options.out_dir / (stem + "_trace.csv"),
                 [&](std::ostream& out) { write_trace(rows, out); });
    write_report(options.out_dir / (stem + "_report.txt"), report, topo);
    return report;
}

ScanResult run_scan(const Scenario& scenario, const ScanOptions& options) {
    const Topology topo = make_topology(scenario);
    const NetworkState base = initial_state(scenario);
    const ScanResult surface =
        options.parallel
            ? scan_surface_parallel(base, scenario.channel, topo, options.robot_a,
                                    options.robot_b, options.samples)
            : scan_surface_serial(base, scenario.channel, topo, options.robot_a,
                                  options.robot_b, options.samples);
    fs::create_directories(options.out_dir);
    write_atomic(options.out_dir / (scenario.name + "_scan.csv"),
                 [&](std::ostream& out) { write_surface(surface, out); });
    return surface;
}

std::vector<Table3Row> run_table3(const Table3Options& options) {
    static const double kNoise[] = {0.6, 1.0, 2.0, 3.0, 4.0, 10.0};
    static const double kTarget[] = {0.0327, 0.0200, 0.0108, 0.0073, 0.0055, 0.0022};
    static const char* kScenario[] = {
        "two_flow_table3_noise06", "two_flow_table3_noise1", "two_flow_table3_noise2",
        "two_flow_table3_noise3",  "two_flow_table3_noise4", "two_flow_table3_noise10",
    };
    constexpr int kRows = 6;

    std::vector<Table3Row> rows(kRows);
    const std::uint64_t base_seed = options.seed.value_or(1);

#pragma omp parallel for schedule(dynamic) if (options.parallel)
    for (int r = 0; r < kRows; ++r) {
        const Scenario scenario = builtin_scenario(kScenario[r]);
        const Topology topo = make_topology(scenario);
        const NetworkState start = initial_state(scenario);
        const std::uint64_t row_seed =
            Rng::substream_seed(base_seed, static_cast<std::uint64_t>(r));
        const AnnealResult result =
            anneal(start, scenario.annealing, scenario.channel, topo, row_seed);
        const NetworkEvaluation eval =
            evaluate_network(result.best, scenario.channel, topo);

        Table3Row row;
        row.noise = kNoise[r];
        row.target = kTarget[r];
        row.achieved = result.best_cost;
        row.link_sinrs = eval.link_sinrs;
        double lo = eval.link_sinrs.front();
        double hi = lo;
        double worst = 0.0;
        for (double s : eval.link_sinrs) {
            lo = std::min(lo, s);
            hi = std::max(hi, s);
            worst = std::max(worst, std::abs(s - row.target) / row.target);
        }
        row.max_rel_error = worst;
        row.pairwise_spread = (hi - lo) / lo;
        rows[static_cast<size_t>(r)] = std::move(row);
    }

    fs::create_directories(options.out_dir);
    write_atomic(options.out_dir / "table3.txt", [&](std::ostream& out) {
        out << "noise      target     achieved    max_rel_err  spread      link_sinrs\n";
        for (const Table3Row& row : rows) {
            char head[96];
            std::snprintf(head, sizeof head, "%-10.4g %-10.4g %-11.6g %-12.4g %-11.4g",
                          row.noise, row.target, row.achieved, row.max_rel_error,
                          row.pairwise_spread);
            out << head;
            for (size_t l = 0; l < row.link_sinrs.size(); ++l) {
                char cell[32];
                std::snprintf(cell, sizeof cell, "%s%.6g", l == 0 ? "" : " ",
                              row.link_sinrs[l]);
                out << cell;
            }
            out << '\n';
        }
    });
    return rows;
}

} // namespace minsinr
