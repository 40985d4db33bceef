// SPDX-License-Identifier: Apache-2.0
#include "minsinr/controller.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "minsinr/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace minsinr {

void validate(const ControllerParams& params) {
    if (!(params.delta > 0.0) || !std::isfinite(params.delta)) {
        throw ValidationError("controller.delta must be > 0");
    }
    if (params.candidate_count < 3) {
        throw ValidationError("controller.candidate_count must be >= 3");
    }
    if (params.max_iterations < 0) {
        throw ValidationError("controller.max_iterations must be >= 0");
    }
    if (!(params.change_threshold >= 0.0) || !std::isfinite(params.change_threshold)) {
        throw ValidationError("controller.change_threshold must be >= 0");
    }
}

std::map<int, std::vector<SinrReport>> stat_round(const NetworkState& state,
                                                  const ChannelParams& params,
                                                  const Topology& topo,
                                                  long iteration) {
    const NetworkEvaluation eval = evaluate_network(state, params, topo);
    std::map<int, std::vector<SinrReport>> reports;
    for (size_t i = 0; i < topo.links().size(); ++i) {
        const Link& link = topo.links()[i];
        reports[link.flow_id].push_back(
            {link.flow_id, link.index, eval.link_sinrs[i], link.rx_node, iteration});
    }
    return reports;
}

MoveDecision modal_decide(NodeId robot, int flow_id, const NetworkState& state,
                          const ChannelParams& params, const ControllerParams& ctrl,
                          const Topology& topo) {
    if (topo.role(robot) != NodeRole::Robot || topo.flow_of(robot) != flow_id) {
        throw ValidationError("modal_decide: node " + std::to_string(robot) +
                              " is not a robot of flow " + std::to_string(flow_id));
    }

    const double current = flow_cost(flow_id, state, params, topo);
    const std::vector<Position> candidates =
        candidate_points(state.pos(robot), ctrl.delta, ctrl.candidate_count);

    // Each candidate evaluation is pure on its own scratch state, so the
    // loop can fan out; the argmax below runs serially in angle order.
    std::vector<double> costs(candidates.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long idx = 0; idx < static_cast<long>(candidates.size()); ++idx) {
        NetworkState scratch = state;
        scratch.set_pos(robot, candidates[static_cast<size_t>(idx)]);
        costs[static_cast<size_t>(idx)] = flow_cost(flow_id, scratch, params, topo);
    }

    size_t best = 0;
    for (size_t idx = 1; idx < costs.size(); ++idx) {
        if (costs[idx] > costs[best]) { // strict: ties keep the lowest angle index
            best = idx;
        }
    }

    if (costs[best] > current) {
        return {robot, true, candidates[best], costs[best]};
    }
    return {robot, false, state.pos(robot), current};
}

namespace {

// Robots on a link, ascending id.
std::vector<NodeId> link_robots(const Link& link, const Topology& topo) {
    std::vector<NodeId> robots;
    for (NodeId node : {link.tx_node, link.rx_node}) {
        if (topo.role(node) == NodeRole::Robot) {
            robots.push_back(node);
        }
    }
    std::sort(robots.begin(), robots.end());
    return robots;
}

} // namespace

std::pair<NetworkState, bool> controller_step(const NetworkState& state,
                                              const ChannelParams& params,
                                              const ControllerParams& ctrl,
                                              const Topology& topo) {
    NetworkState current = state;
    bool any_moved = false;

    for (int flow_id = 1; flow_id <= topo.flow_count(); ++flow_id) {
        const auto [bottleneck, pseudo] = bottleneck_links(flow_id, current, params, topo);

        std::vector<NodeId> consulted;
        bool flow_moved = false;
        for (NodeId robot : link_robots(bottleneck, topo)) {
            consulted.push_back(robot);
            const MoveDecision decision = modal_decide(robot, flow_id, current, params, ctrl, topo);
            if (decision.move) {
                current.set_pos(robot, decision.target);
                flow_moved = true;
                any_moved = true;
            }
        }

        // Pseudo-bottleneck robots act only when the bottleneck's own robots
        // are stuck, to unjam configurations the bottleneck cannot improve.
        if (!flow_moved && pseudo.has_value()) {
            for (NodeId robot : link_robots(*pseudo, topo)) {
                if (std::find(consulted.begin(), consulted.end(), robot) != consulted.end()) {
                    continue; // at most one decision per robot per iteration
                }
                const MoveDecision decision =
                    modal_decide(robot, flow_id, current, params, ctrl, topo);
                if (decision.move) {
                    current.set_pos(robot, decision.target);
                    any_moved = true;
                }
            }
        }
    }

    return {std::move(current), any_moved};
}

double mobility_step(NetworkState& state, const MobilityModel& mobility, Rng& rng) {
    double largest = 0.0;
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (const auto& [node, step] : mobility.walk_step) {
        const double angle = two_pi * rng.uniform();
        const double length = step * rng.uniform();
        const Position from = state.pos(node);
        Position to{from.x + length * std::cos(angle), from.y + length * std::sin(angle)};
        to.x = std::clamp(to.x, mobility.bounds.x_min, mobility.bounds.x_max);
        to.y = std::clamp(to.y, mobility.bounds.y_min, mobility.bounds.y_max);
        state.set_pos(node, to);
        largest = std::max(largest, distance(from, to));
    }
    return largest;
}

DistributedResult run_distributed(const NetworkState& initial,
                                  const ChannelParams& params,
                                  const ControllerParams& ctrl,
                                  const MobilityModel& mobility,
                                  const Topology& topo, std::uint64_t seed) {
    validate(ctrl);
    Rng rng(seed);

    DistributedResult result;
    NetworkState state = initial;
    result.trace.reserve(static_cast<size_t>(std::min(ctrl.max_iterations, 4096L)));

    for (long it = 1; it <= ctrl.max_iterations; ++it) {
        auto [next, moved] = controller_step(state, params, ctrl, topo);
        state = std::move(next);
        const double displacement = mobility_step(state, mobility, rng);
        state.iteration = it;

        const NetworkEvaluation eval = evaluate_network(state, params, topo);
        result.trace.push_back({it, state, eval.flow_costs, eval.global, moved, displacement});
        result.iterations = it;

        if (!moved && displacement <= ctrl.change_threshold) {
            result.converged = true;
            break;
        }
    }

    result.final_state = std::move(state);
    return result;
}

} // namespace minsinr
