// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "minsinr/network.hpp"
#include "minsinr/rng.hpp"

namespace minsinr {

/// Geometric-cooling schedule for the centralized solver.
///
/// The working temperature at step k is
///   t_base * alpha^floor(k / steps_per_temperature)
/// where t_base = t0 * s and s is a problem-scale calibration: the mean
/// absolute cost change over `warmup_proposals` accept-all random-walk
/// proposals, or the initial global cost when warmup_proposals == 0. The
/// proposal radius decays by radius_alpha per temperature stage down to
/// min_step_radius, so late stages fine-tune instead of jumping.
struct AnnealingSchedule {
    double t0 = 1.0;
    double alpha = 0.95;
    long iterations = 20000;
    double step_radius = 1.0;
    long steps_per_temperature = 60;
    double radius_alpha = 0.97;
    double min_step_radius = 0.01;
    long warmup_proposals = 100;
    long restarts = 3; ///< independent chains; the best-scoring one is kept

    bool operator==(const AnnealingSchedule&) const = default;
};

/// Throws ValidationError naming the first field out of range.
void validate(const AnnealingSchedule& schedule);

/// One Metropolis step as recorded in the trace.
struct AnnealStep {
    long iteration = 0;    ///< 1-based
    double global_cost = 0.0; ///< chain cost after the accept/reject decision
    bool accepted = false;
    double temperature = 0.0;
};

struct AnnealResult {
    NetworkState best;     ///< best-ever state visited (initial, warmup, or main loop)
    double best_cost = 0.0;
    NetworkState last;     ///< chain state after the final step
    double last_cost = 0.0;
    double initial_cost = 0.0;
    std::vector<AnnealStep> steps;            ///< length == schedule.iterations
    std::vector<NetworkState> states;         ///< chain state after each step
    std::vector<std::vector<double>> flow_costs; ///< per-step flow costs
};

/// Copy of `state` with one uniformly chosen robot displaced by a uniform
/// point of the disc of radius step_radius. Consumes exactly three draws.
NetworkState propose_neighbor(const NetworkState& state, double step_radius,
                              Rng& rng, const Topology& topo);

/// Maximization Metropolis rule: improvements are accepted without touching
/// the generator; a worsening of size D survives with probability exp(-D/T).
bool metropolis_accept(double c_old, double c_new, double temperature, Rng& rng);

/// Run `restarts` independent chains from `initial` and return the result of
/// the chain with the best best_cost (ties keep the earliest chain). The
/// objective surface is multi-peaked, so single chains occasionally freeze on
/// an inferior peak; restarts make that failure mode vanishingly rare. Chain
/// 0 is seeded with `seed` itself (restarts == 1 is the classic single
/// chain), later chains with substreams of it. Deterministic given `seed`.
AnnealResult anneal(const NetworkState& initial, const AnnealingSchedule& schedule,
                    const ChannelParams& params, const Topology& topo,
                    std::uint64_t seed);

} // namespace minsinr
