// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "minsinr/network.hpp"

namespace minsinr {

/// Global-cost surface over the positions of two robots, each slid along its
/// own flow's tx -> rx segment. Row-major: cost[i * samples + j] belongs to
/// (t1[i], t2[j]).
struct ScanResult {
    int samples = 0;
    NodeId robot_a = 0;
    NodeId robot_b = 0;
    std::vector<double> t1;
    std::vector<double> t2;
    std::vector<double> cost;
};

/// Sample parameter for index i: i / (samples - 1), or 0.5 when samples == 1.
double scan_parameter(int i, int samples);

/// Serial reference implementation. Throws ValidationError when a robot id
/// is unknown, is not a robot, or both robots share a flow.
ScanResult scan_surface_serial(const NetworkState& base, const ChannelParams& params,
                               const Topology& topo, NodeId robot_a, NodeId robot_b,
                               int samples);

/// OpenMP twin of scan_surface_serial. Cells are independent pure
/// evaluations written to disjoint slots, so the result is bit-identical to
/// the serial kernel regardless of thread count. Falls back to the serial
/// loop when built without OpenMP.
ScanResult scan_surface_parallel(const NetworkState& base, const ChannelParams& params,
                                 const Topology& topo, NodeId robot_a, NodeId robot_b,
                                 int samples);

/// Strict local maxima over interior cells (all eight neighbors exist and
/// are strictly lower). Returns their flat indices, ascending.
std::vector<size_t> strict_interior_maxima(const ScanResult& surface);

} // namespace minsinr
