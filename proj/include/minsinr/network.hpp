// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minsinr/channel.hpp"
#include "minsinr/geometry.hpp"

namespace minsinr {

/// Node identifier. Scenarios assign them densely, starting at 1, in
/// document order (flow 1's tx, its robots, its rx, then flow 2, ...).
using NodeId = int;

enum class NodeRole { Transmitter, Receiver, Robot };

/// One transmitter-to-receiver communication path and its robot chain,
/// ordered from the transmitter side.
struct FlowSpec {
    int flow_id = 0; ///< 1-based
    NodeId tx = 0;
    NodeId rx = 0;
    std::vector<NodeId> robots;
    bool tx_mobile = false;
    bool rx_mobile = false;
};

/// Directed hop inside a flow. index is 1-based from the transmitter.
struct Link {
    int flow_id = 0;
    int index = 0;
    NodeId tx_node = 0;
    NodeId rx_node = 0;

    bool operator==(const Link&) const = default;
};

/// Positions of every node at one simulation instant. Storage is dense:
/// positions[id - 1] is the position of node id.
struct NetworkState {
    std::vector<Position> positions;
    long iteration = 0;

    Position pos(NodeId id) const { return positions[static_cast<size_t>(id) - 1]; }
    void set_pos(NodeId id, Position p) { positions[static_cast<size_t>(id) - 1] = p; }

    bool operator==(const NetworkState&) const = default;
};

/// Links of one flow: [tx -> r1, r1 -> r2, ..., rk -> rx].
std::vector<Link> build_links(const FlowSpec& flow);

/// Interference set of a link: every transmitting node in the network
/// (all transmitters and all robots, any flow) except the link's own
/// tx_node and rx_node. Receivers never transmit. Result sorted ascending.
std::vector<NodeId> interferers(const Link& link, const std::vector<FlowSpec>& flows);

/// Validated immutable topology with per-link interferer sets precomputed.
class Topology {
public:
    /// Throws ValidationError unless node ids are exactly 1..N with no
    /// duplicates, each id in one flow, and every flow non-degenerate.
    explicit Topology(std::vector<FlowSpec> flows);

    const std::vector<FlowSpec>& flows() const { return flows_; }
    const std::vector<Link>& links() const { return links_; }
    int node_count() const { return node_count_; }
    int flow_count() const { return static_cast<int>(flows_.size()); }

    NodeRole role(NodeId id) const { return roles_[static_cast<size_t>(id) - 1]; }
    bool transmits(NodeId id) const { return role(id) != NodeRole::Receiver; }

    /// Transmit power of a node under the given channel parameters.
    double node_power(NodeId id, const ChannelParams& params) const {
        return role(id) == NodeRole::Transmitter ? params.p_t : params.p_m;
    }

    /// Links of one flow as a [first, last) range into links().
    std::pair<size_t, size_t> flow_link_range(int flow_id) const;

    /// Interference set of links()[ordinal].
    const std::vector<NodeId>& link_interferers(size_t ordinal) const {
        return interferers_[ordinal];
    }

    /// All robot ids across all flows, ascending.
    const std::vector<NodeId>& robots() const { return robots_; }

    /// Flow that owns a node id.
    int flow_of(NodeId id) const { return flow_of_[static_cast<size_t>(id) - 1]; }

private:
    std::vector<FlowSpec> flows_;
    std::vector<Link> links_;
    std::vector<std::vector<NodeId>> interferers_;
    std::vector<NodeRole> roles_;
    std::vector<int> flow_of_;
    std::vector<NodeId> robots_;
    std::vector<std::pair<size_t, size_t>> flow_ranges_;
    int node_count_ = 0;
};

/// SINR of one link in a concrete state (transmit powers resolved by role).
double link_sinr_in_state(const Link& link, const NetworkState& state,
                          const ChannelParams& params, const Topology& topo);

/// Minimum link SINR within a flow.
double flow_cost(int flow_id, const NetworkState& state,
                 const ChannelParams& params, const Topology& topo);

/// Minimum flow cost across the network; the objective being maximized.
double global_cost(const NetworkState& state, const ChannelParams& params,
                   const Topology& topo);

/// Lowest-SINR link of a flow and the second lowest (nullopt for single-link
/// flows). Ties break toward the lower link index.
std::pair<Link, std::optional<Link>> bottleneck_links(int flow_id,
                                                      const NetworkState& state,
                                                      const ChannelParams& params,
                                                      const Topology& topo);

/// Every link SINR, every flow cost, and the global cost in one pass.
struct NetworkEvaluation {
    std::vector<double> link_sinrs; ///< parallel to topo.links()
    std::vector<double> flow_costs; ///< index i = flow_id i+1
    double global = 0.0;
};

NetworkEvaluation evaluate_network(const NetworkState& state,
                                   const ChannelParams& params,
                                   const Topology& topo);

} // namespace minsinr
