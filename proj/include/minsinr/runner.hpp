// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "minsinr/scenario.hpp"

namespace minsinr {

enum class RunMode { Centralized, Distributed };

/// Summary of one simulate run, rendered into the report file and stdout.
struct RunReport {
    std::string scenario_name;
    RunMode mode = RunMode::Centralized;
    std::uint64_t seed = 0;
    long iterations = 0;       ///< executed
    bool converged = false;    ///< distributed only; annealer always runs out its budget
    double final_global_cost = 0.0;
    std::vector<double> final_link_sinrs; ///< recomputed from the final state
    std::vector<double> final_flow_costs;
    double wall_seconds = 0.0;
};

struct SimulateOptions {
    RunMode mode = RunMode::Centralized;
    std::optional<std::uint64_t> seed;   ///< overrides the scenario seed
    std::optional<long> iterations;      ///< overrides the scenario budget
    long trace_stride = 1;               ///< write every n-th iteration block
    std::filesystem::path out_dir = "out";
};

/// Run one scenario and write <name>_<mode>_trace.csv plus
/// <name>_<mode>_report.txt into out_dir. The trace always contains the
/// iteration-0 block and the final iteration's block.
RunReport run_simulate(const Scenario& scenario, const SimulateOptions& options);

struct ScanOptions {
    NodeId robot_a = 0;
    NodeId robot_b = 0;
    int samples = 101;
    bool parallel = true;
    std::filesystem::path out_dir = "out";
};

/// Evaluate the two-robot surface and write <name>_scan.csv.
ScanResult run_scan(const Scenario& scenario, const ScanOptions& options);

struct Table3Row {
    double noise = 0.0;
    double target = 0.0;       ///< published optimum for this noise level
    double achieved = 0.0;     ///< best global cost found
    std::vector<double> link_sinrs;
    double max_rel_error = 0.0;
    double pairwise_spread = 0.0;
};

struct Table3Options {
    std::optional<std::uint64_t> seed;
    std::filesystem::path out_dir = "out";
    bool parallel = true; ///< rows on a worker pool, seeds fixed per row
};

/// Run the centralized solver on every built-in noise row and write
/// table3.txt (data only, no timing, so reruns are byte-identical).
std::vector<Table3Row> run_table3(const Table3Options& options);

const char* mode_name(RunMode mode);

} // namespace minsinr
