// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "minsinr/network.hpp"
#include "minsinr/rng.hpp"

namespace minsinr {

/// Tuning knobs of the decentralized controller.
struct ControllerParams {
    double delta = 0.25;          ///< move granularity in meters
    int candidate_count = 36;     ///< points on the candidate circle
    long max_iterations = 2000;
    double change_threshold = 1e-6; ///< endpoint displacement that re-arms the loop

    bool operator==(const ControllerParams&) const = default;
};

/// Throws ValidationError naming the first field out of range.
void validate(const ControllerParams& params);

/// One measured link SINR as disseminated inside a flow. The receiving
/// node of the link reports it.
struct SinrReport {
    int flow_id = 0;
    int link_index = 0;
    double sinr = 0.0;
    NodeId reporting_node = 0;
    long iteration = 0;
};

/// Outcome of one robot's move deliberation.
struct MoveDecision {
    NodeId robot = 0;
    bool move = false;       ///< false = Stay
    Position target;         ///< on the candidate circle when move is true
    double achieved_cost = 0.0; ///< flow cost of the chosen option
};

enum class EndpointMode { Static, RandomWalk };

struct Rect {
    double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
};

/// Endpoint motion description. Robots are never moved by the mobility
/// model; only flow endpoints walk.
struct MobilityModel {
    std::map<NodeId, double> walk_step; ///< random-walk endpoints and their max step
    Rect bounds;                        ///< positions are clipped into this box

    bool any_mobile() const { return !walk_step.empty(); }
};

/// Per-link SINR measurements for every flow, as one atomic snapshot of the
/// state. Keyed by flow_id.
std::map<int, std::vector<SinrReport>> stat_round(const NetworkState& state,
                                                  const ChannelParams& params,
                                                  const Topology& topo,
                                                  long iteration);

/// Evaluate all candidate positions of one robot with the rest of the
/// network frozen; move only on strict improvement of the robot's own flow
/// cost, ties among maxima toward the lowest angle index.
MoveDecision modal_decide(NodeId robot, int flow_id, const NetworkState& state,
                          const ChannelParams& params, const ControllerParams& ctrl,
                          const Topology& topo);

/// One controller iteration over all flows in ascending flow_id order.
/// Eligible robots are the bottleneck link's robots (ascending id), then the
/// pseudo-bottleneck's robots if no bottleneck robot of that flow moved.
/// Moves apply immediately; later decisions in the same iteration see them.
/// Each robot moves at most once per iteration.
std::pair<NetworkState, bool> controller_step(const NetworkState& state,
                                              const ChannelParams& params,
                                              const ControllerParams& ctrl,
                                              const Topology& topo);

/// Displace every random-walk endpoint by a uniform direction and a uniform
/// length in [0, step], clipped to the bounds. Returns the largest single
/// displacement so the caller can compare against change_threshold.
double mobility_step(NetworkState& state, const MobilityModel& mobility, Rng& rng);

/// Post-iteration snapshot for traces and convergence analysis.
struct IterationRecord {
    long iteration = 0;           ///< 1-based
    NetworkState state;           ///< after controller_step and mobility
    std::vector<double> flow_costs;
    double global = 0.0;
    bool robot_moved = false;
    double endpoint_displacement = 0.0;
};

struct DistributedResult {
    NetworkState final_state;
    long iterations = 0; ///< executed controller iterations
    bool converged = false;
    std::vector<IterationRecord> trace;
};

/// Iterate controller_step + mobility_step until a full iteration passes
/// with no robot move and no endpoint displacement above change_threshold,
/// or until ctrl.max_iterations. Deterministic given seed.
DistributedResult run_distributed(const NetworkState& initial,
                                  const ChannelParams& params,
                                  const ControllerParams& ctrl,
                                  const MobilityModel& mobility,
                                  const Topology& topo, std::uint64_t seed);

} // namespace minsinr
