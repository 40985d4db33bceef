// SPDX-License-Identifier: Apache-2.0
#include "minsinr/network.hpp"

#include <algorithm>
#include <string>

#include "minsinr/errors.hpp"

namespace minsinr {

std::vector<Link> build_links(const FlowSpec& flow) {
    std::vector<Link> links;
    links.reserve(flow.robots.size() + 1);
    NodeId prev = flow.tx;
    int index = 1;
    for (NodeId robot : flow.robots) {
        links.push_back({flow.flow_id, index++, prev, robot});
        prev = robot;
    }
    links.push_back({flow.flow_id, index, prev, flow.rx});
    return links;
}

std::vector<NodeId> interferers(const Link& link, const std::vector<FlowSpec>& flows) {
    std::vector<NodeId> result;
    for (const FlowSpec& flow : flows) {
        if (flow.tx != link.tx_node && flow.tx != link.rx_node) {
            result.push_back(flow.tx);
        }
        for (NodeId robot : flow.robots) {
            if (robot != link.tx_node && robot != link.rx_node) {
                result.push_back(robot);
            }
        }
        // Receivers never transmit, so flow.rx is never an interferer.
    }
    std::sort(result.begin(), result.end());
    return result;
}

Topology::Topology(std::vector<FlowSpec> flows) : flows_(std::move(flows)) {
    if (flows_.empty()) {
        throw ValidationError("flows: at least one flow is required");
    }

    int expected_flow_id = 1;
    size_t total_nodes = 0;
    for (FlowSpec& flow : flows_) {
        if (flow.flow_id == 0) {
            flow.flow_id = expected_flow_id;
        }
        if (flow.flow_id != expected_flow_id) {
            throw ValidationError("flows: flow_id values must be 1..n in order, got " +
                                  std::to_string(flow.flow_id) + " at position " +
                                  std::to_string(expected_flow_id));
        }
        ++expected_flow_id;
        total_nodes += flow.robots.size() + 2;
    }

    node_count_ = static_cast<int>(total_nodes);
    roles_.assign(total_nodes, NodeRole::Receiver);
    flow_of_.assign(total_nodes, 0);
    std::vector<bool> seen(total_nodes, false);

    auto claim = [&](NodeId id, NodeRole role, int flow_id) {
        if (id < 1 || id > node_count_) {
            throw ValidationError("flows: node id " + std::to_string(id) +
                                  " outside the dense range 1.." + std::to_string(node_count_));
        }
        const size_t slot = static_cast<size_t>(id) - 1;
        if (seen[slot]) {
            throw ValidationError("flows: node id " + std::to_string(id) +
                                  " appears in more than one role or flow");
        }
        seen[slot] = true;
        roles_[slot] = role;
        flow_of_[slot] = flow_id;
    };

    for (const FlowSpec& flow : flows_) {
        claim(flow.tx, NodeRole::Transmitter, flow.flow_id);
        for (NodeId robot : flow.robots) {
            claim(robot, NodeRole::Robot, flow.flow_id);
            robots_.push_back(robot);
        }
        claim(flow.rx, NodeRole::Receiver, flow.flow_id);
    }
    std::sort(robots_.begin(), robots_.end());

    for (const FlowSpec& flow : flows_) {
        const size_t first = links_.size();
        auto flow_links = build_links(flow);
        links_.insert(links_.end(), flow_links.begin(), flow_links.end());
        flow_ranges_.emplace_back(first, links_.size());
    }

    interferers_.reserve(links_.size());
    for (const Link& link : links_) {
        interferers_.push_back(interferers(link, flows_));
    }
}

std::pair<size_t, size_t> Topology::flow_link_range(int flow_id) const {
    if (flow_id < 1 || flow_id > flow_count()) {
        throw ValidationError("flow_id " + std::to_string(flow_id) + " does not exist");
    }
    return flow_ranges_[static_cast<size_t>(flow_id) - 1];
}

namespace {

// Shared inner evaluation used by every SINR query below. Equivalent to
// composing interferers() with link_sinr(), but without building the
// interferer vector on each call.
double eval_link(size_t ordinal, const NetworkState& state,
                 const ChannelParams& params, const Topology& topo) {
    const Link& link = topo.links()[ordinal];
    const Position rx = state.pos(link.rx_node);
    const double desired = received_power(topo.node_power(link.tx_node, params),
                                          distance(state.pos(link.tx_node), rx), params);
    double denominator = params.p_n;
    for (NodeId node : topo.link_interferers(ordinal)) {
        denominator += received_power(topo.node_power(node, params),
                                      distance(state.pos(node), rx), params);
    }
    if (denominator == 0.0) {
        throw Error("link_sinr: undefined ratio, zero noise power and no interference");
    }
    return desired / denominator;
}

size_t link_ordinal(const Link& link, const Topology& topo) {
    const auto [first, last] = topo.flow_link_range(link.flow_id);
    const size_t ordinal = first + static_cast<size_t>(link.index) - 1;
    if (ordinal >= last) {
        throw ValidationError("link index " + std::to_string(link.index) +
                              " does not exist in flow " + std::to_string(link.flow_id));
    }
    return ordinal;
}

} // namespace

double link_sinr_in_state(const Link& link, const NetworkState& state,
                          const ChannelParams& params, const Topology& topo) {
    return eval_link(link_ordinal(link, topo), state, params, topo);
}

double flow_cost(int flow_id, const NetworkState& state,
                 const ChannelParams& params, const Topology& topo) {
    const auto [first, last] = topo.flow_link_range(flow_id);
    double minimum = eval_link(first, state, params, topo);
    for (size_t i = first + 1; i < last; ++i) {
        const double s = eval_link(i, state, params, topo);
        if (s < minimum) {
            minimum = s;
        }
    }
    return minimum;
}

double global_cost(const NetworkState& state, const ChannelParams& params,
                   const Topology& topo) {
    double minimum = flow_cost(1, state, params, topo);
    for (int flow_id = 2; flow_id <= topo.flow_count(); ++flow_id) {
        const double c = flow_cost(flow_id, state, params, topo);
        if (c < minimum) {
            minimum = c;
        }
    }
    return minimum;
}

std::pair<Link, std::optional<Link>> bottleneck_links(int flow_id,
                                                      const NetworkState& state,
                                                      const ChannelParams& params,
                                                      const Topology& topo) {
    const auto [first, last] = topo.flow_link_range(flow_id);

    size_t lowest = first;
    double lowest_sinr = eval_link(first, state, params, topo);
    for (size_t i = first + 1; i < last; ++i) {
        const double s = eval_link(i, state, params, topo);
        if (s < lowest_sinr) { // strict: ties keep the lower link index
            lowest_sinr = s;
            lowest = i;
        }
    }

    if (last - first == 1) {
        return {topo.links()[lowest], std::nullopt};
    }

    bool have_second = false;
    size_t second = first;
    double second_sinr = 0.0;
    for (size_t i = first; i < last; ++i) {
        if (i == lowest) {
            continue;
        }
        const double s = eval_link(i, state, params, topo);
        if (!have_second || s < second_sinr) {
            have_second = true;
            second_sinr = s;
            second = i;
        }
    }
    return {topo.links()[lowest], topo.links()[second]};
}

NetworkEvaluation evaluate_network(const NetworkState& state,
                                   const ChannelParams& params,
                                   const Topology& topo) {
    NetworkEvaluation eval;
    eval.link_sinrs.resize(topo.links().size());
    for (size_t i = 0; i < topo.links().size(); ++i) {
        eval.link_sinrs[i] = eval_link(i, state, params, topo);
    }
    eval.flow_costs.resize(static_cast<size_t>(topo.flow_count()));
    for (int flow_id = 1; flow_id <= topo.flow_count(); ++flow_id) {
        const auto [first, last] = topo.flow_link_range(flow_id);
        double minimum = eval.link_sinrs[first];
        for (size_t i = first + 1; i < last; ++i) {
            minimum = std::min(minimum, eval.link_sinrs[i]);
        }
        eval.flow_costs[static_cast<size_t>(flow_id) - 1] = minimum;
    }
    eval.global = *std::min_element(eval.flow_costs.begin(), eval.flow_costs.end());
    return eval;
}

} // namespace minsinr
