// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "minsinr/annealer.hpp"
#include "minsinr/controller.hpp"
#include "minsinr/network.hpp"
#include "minsinr/scan.hpp"

namespace minsinr {

inline constexpr int kScenarioFormatVersion = 1;

struct ScenarioEndpoint {
    Position pos;
    bool mobile = false;
    double step = 0.2; ///< random-walk step, used only when mobile

    bool operator==(const ScenarioEndpoint&) const = default;
};

struct ScenarioFlow {
    ScenarioEndpoint tx;
    ScenarioEndpoint rx;
    std::vector<Position> robots;

    bool operator==(const ScenarioFlow&) const = default;
};

/// Complete description of one experiment: topology, channel, solver
/// settings, and seed. The JSON grammar is documented in the README.
struct Scenario {
    int format_version = kScenarioFormatVersion;
    std::string name;
    ChannelParams channel;
    std::vector<ScenarioFlow> flows;
    AnnealingSchedule annealing;
    ControllerParams controller;
    std::uint64_t seed = 1;

    bool operator==(const Scenario&) const = default;
};

/// Parse and fully validate a scenario document.
/// Syntax or type problems -> ParseError; invariant violations -> ValidationError.
Scenario parse_scenario(const std::string& json_text);

/// parse_scenario over a file's contents. Missing file -> ParseError.
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical JSON rendering; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

/// Node ids assigned in document order starting at 1: per flow, tx first,
/// then the robots in chain order, then rx.
Topology make_topology(const Scenario& scenario);

NetworkState initial_state(const Scenario& scenario);

/// Mobility model for the scenario's mobile endpoints: bounds are the
/// bounding box of all initial positions inflated by 2 m on each side.
MobilityModel make_mobility(const Scenario& scenario);

/// Names of the scenarios compiled into the library (the shipped corpus).
std::vector<std::string> builtin_scenario_names();

/// Built-in scenario by name; throws ValidationError for unknown names.
Scenario builtin_scenario(const std::string& name);

/// Resolve a CLI scenario argument: an existing file path is loaded, any
/// other string must name a built-in.
Scenario resolve_scenario(const std::string& path_or_name);

/// One trace line: where one node was at one iteration, with the flow and
/// global minima of that iteration attached to every row of the block.
struct TraceRow {
    long iteration = 0;
    NodeId node_id = 0;
    double x = 0.0;
    double y = 0.0;
    std::vector<double> flow_min; ///< per-flow minimum SINR
    double global_min = 0.0;
};

/// Format a double with 12 significant digits (%.12g), enough to round-trip
/// IEEE doubles stably for golden traces.
std::string format_sig12(double v);

/// Delimited text with a header row; columns: iteration, node_id, x, y,
/// flow_min_sinr_1..n, global_min_sinr. All values at 12 significant digits.
void write_trace(const std::vector<TraceRow>& rows, std::ostream& out);
void write_trace(const std::vector<TraceRow>& rows, const std::filesystem::path& path);

/// Read back a trace written by write_trace. Throws ParseError on malformed
/// input. Values equal the written 12-digit decimals exactly.
std::vector<TraceRow> read_trace(std::istream& in);
std::vector<TraceRow> read_trace_file(const std::filesystem::path& path);

/// Tabular (param1, param2, min_sinr) rows for any surface plotter.
void write_surface(const ScanResult& surface, std::ostream& out);
void write_surface(const ScanResult& surface, const std::filesystem::path& path);

} // namespace minsinr
