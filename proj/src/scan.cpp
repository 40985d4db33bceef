// SPDX-License-Identifier: Apache-2.0
#include "minsinr/scan.hpp"

#include <string>

#include "minsinr/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace minsinr {

double scan_parameter(int i, int samples) {
    if (samples <= 1) {
        return 0.5;
    }
    return static_cast<double>(i) / static_cast<double>(samples - 1);
}

namespace {

struct ScanSetup {
    Position a_from, a_to; // robot_a slides along this segment
    Position b_from, b_to;
};

ScanSetup check_scan_args(const NetworkState& base, const Topology& topo,
                          NodeId robot_a, NodeId robot_b, int samples) {
    if (samples < 1) {
        throw ValidationError("scan.samples must be >= 1");
    }
    for (NodeId robot : {robot_a, robot_b}) {
        if (robot < 1 || robot > topo.node_count() || topo.role(robot) != NodeRole::Robot) {
            throw ValidationError("scan: node " + std::to_string(robot) + " is not a robot");
        }
    }
    if (topo.flow_of(robot_a) == topo.flow_of(robot_b)) {
        throw ValidationError("scan: robots " + std::to_string(robot_a) + " and " +
                              std::to_string(robot_b) + " belong to the same flow");
    }
    const FlowSpec& flow_a = topo.flows()[static_cast<size_t>(topo.flow_of(robot_a)) - 1];
    const FlowSpec& flow_b = topo.flows()[static_cast<size_t>(topo.flow_of(robot_b)) - 1];
    return {base.pos(flow_a.tx), base.pos(flow_a.rx), base.pos(flow_b.tx), base.pos(flow_b.rx)};
}

double cell_cost(const ScanSetup& setup, const NetworkState& base,
                 const ChannelParams& params, const Topology& topo,
                 NodeId robot_a, NodeId robot_b, double ta, double tb) {
    NetworkState state = base;
    state.set_pos(robot_a, lerp(setup.a_from, setup.a_to, ta));
    state.set_pos(robot_b, lerp(setup.b_from, setup.b_to, tb));
    return global_cost(state, params, topo);
}

ScanResult make_result(NodeId robot_a, NodeId robot_b, int samples) {
    ScanResult result;
    result.samples = samples;
    result.robot_a = robot_a;
    result.robot_b = robot_b;
    result.t1.resize(static_cast<size_t>(samples));
    result.t2.resize(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        result.t1[static_cast<size_t>(i)] = scan_parameter(i, samples);
        result.t2[static_cast<size_t>(i)] = scan_parameter(i, samples);
    }
    result.cost.resize(static_cast<size_t>(samples) * static_cast<size_t>(samples));
    return result;
}

} // namespace

ScanResult scan_surface_serial(const NetworkState& base, const ChannelParams& params,
                               const Topology& topo, NodeId robot_a, NodeId robot_b,
                               int samples) {
    const ScanSetup setup = check_scan_args(base, topo, robot_a, robot_b, samples);
    ScanResult result = make_result(robot_a, robot_b, samples);
    for (int i = 0; i < samples; ++i) {
        for (int j = 0; j < samples; ++j) {
            result.cost[static_cast<size_t>(i) * static_cast<size_t>(samples) +
                        static_cast<size_t>(j)] =
                cell_cost(setup, base, params, topo, robot_a, robot_b,
                          result.t1[static_cast<size_t>(i)], result.t2[static_cast<size_t>(j)]);
        }
    }
    return result;
}

ScanResult scan_surface_parallel(const NetworkState& base, const ChannelParams& params,
                                 const Topology& topo, NodeId robot_a, NodeId robot_b,
                                 int samples) {
    const ScanSetup setup = check_scan_args(base, topo, robot_a, robot_b, samples);
    ScanResult result = make_result(robot_a, robot_b, samples);
    const long total = static_cast<long>(samples) * static_cast<long>(samples);
    // One flat loop over cells; every cell writes its own slot, so the
    // surface is identical to the serial kernel for any thread count.
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long cell = 0; cell < total; ++cell) {
        const int i = static_cast<int>(cell / samples);
        const int j = static_cast<int>(cell % samples);
        result.cost[static_cast<size_t>(cell)] =
            cell_cost(setup, base, params, topo, robot_a, robot_b,
                      result.t1[static_cast<size_t>(i)], result.t2[static_cast<size_t>(j)]);
    }
    return result;
}

std::vector<size_t> strict_interior_maxima(const ScanResult& surface) {
    std::vector<size_t> maxima;
    const int n = surface.samples;
    for (int i = 1; i + 1 < n; ++i) {
        for (int j = 1; j + 1 < n; ++j) {
            const size_t idx = static_cast<size_t>(i) * static_cast<size_t>(n) +
                               static_cast<size_t>(j);
            const double v = surface.cost[idx];
            bool is_max = true;
            for (int di = -1; di <= 1 && is_max; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) {
                        continue;
                    }
                    const size_t neighbor =
                        static_cast<size_t>(i + di) * static_cast<size_t>(n) +
                        static_cast<size_t>(j + dj);
                    if (!(surface.cost[neighbor] < v)) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (is_max) {
                maxima.push_back(idx);
            }
        }
    }
    return maxima;
}

} // namespace minsinr
