// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "minsinr/network.hpp"
#include "minsinr/rng.hpp"

#include "oracle.hpp"

namespace testutil {

// The two-flow sample network: flow 1 = nodes 1..4 (tx 1, robots 2,3, rx 4),
// flow 2 = nodes 5..8 (tx 5, robots 6,7, rx 8).
inline minsinr::Topology two_flow_topology() {
    return minsinr::Topology({
        {1, 1, 4, {2, 3}, false, false},
        {2, 5, 8, {6, 7}, false, false},
    });
}

// Endpoints at (-10,0)/(10,0) and (0,10)/(0,-10); robots as given.
inline minsinr::NetworkState two_flow_state(minsinr::Position r2, minsinr::Position r3,
                                            minsinr::Position r6, minsinr::Position r7) {
    minsinr::NetworkState state;
    state.positions = {{-10.0, 0.0}, r2, r3, {10.0, 0.0},
                       {0.0, 10.0},  r6, r7, {0.0, -10.0}};
    return state;
}

inline std::vector<oracle::Flow> two_flow_oracle() {
    return {{1, {2, 3}, 4}, {5, {6, 7}, 8}};
}

// One random evaluation problem with both the library view and the oracle
// view of the same network.
struct RandomCase {
    std::vector<minsinr::FlowSpec> flows;
    minsinr::NetworkState state;
    minsinr::ChannelParams params;
    std::vector<oracle::Flow> oracle_flows;
    std::vector<oracle::Pos> oracle_positions;
    oracle::Params oracle_params;
};

inline RandomCase random_case(minsinr::Rng& rng) {
    RandomCase c;
    const int flow_count = 1 + static_cast<int>(rng.uniform() * 4.0);
    int next_id = 1;
    for (int f = 1; f <= flow_count; ++f) {
        minsinr::FlowSpec spec;
        spec.flow_id = f;
        spec.tx = next_id++;
        const int robots = static_cast<int>(rng.uniform() * 4.0);
        for (int r = 0; r < robots; ++r) {
            spec.robots.push_back(next_id++);
        }
        spec.rx = next_id++;
        c.flows.push_back(spec);
        c.oracle_flows.push_back({spec.tx, spec.robots, spec.rx});
    }
    for (int id = 1; id < next_id; ++id) {
        const double x = rng.uniform(-12.0, 12.0);
        const double y = rng.uniform(-12.0, 12.0);
        c.state.positions.push_back({x, y});
        c.oracle_positions.push_back({x, y});
    }
    c.params.eta = rng.uniform(1.5, 3.5);
    c.params.p_t = rng.uniform(0.5, 2.0);
    c.params.p_m = rng.uniform(0.5, 2.0);
    c.params.p_n = rng.uniform(0.05, 5.0);
    c.oracle_params = {c.params.eta, c.params.p_t, c.params.p_m, c.params.p_n,
                       c.params.min_distance};
    return c;
}

} // namespace testutil
