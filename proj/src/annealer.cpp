// SPDX-License-Identifier: Apache-2.0
#include "minsinr/annealer.hpp"

#include <cmath>
#include <string>

#include "minsinr/errors.hpp"

namespace minsinr {

void validate(const AnnealingSchedule& schedule) {
    if (!(schedule.t0 > 0.0) || !std::isfinite(schedule.t0)) {
        throw ValidationError("annealing.t0 must be > 0");
    }
    if (!(schedule.alpha > 0.0 && schedule.alpha < 1.0)) {
        throw ValidationError("annealing.alpha must be in (0, 1)");
    }
    if (schedule.iterations < 0) {
        throw ValidationError("annealing.iterations must be >= 0");
    }
    if (!(schedule.step_radius > 0.0) || !std::isfinite(schedule.step_radius)) {
        throw ValidationError("annealing.step_radius must be > 0");
    }
    if (schedule.steps_per_temperature < 1) {
        throw ValidationError("annealing.steps_per_temperature must be >= 1");
    }
    if (!(schedule.radius_alpha > 0.0 && schedule.radius_alpha <= 1.0)) {
        throw ValidationError("annealing.radius_alpha must be in (0, 1]");
    }
    if (!(schedule.min_step_radius >= 0.0) || !std::isfinite(schedule.min_step_radius)) {
        throw ValidationError("annealing.min_step_radius must be >= 0");
    }
    if (schedule.warmup_proposals < 0) {
        throw ValidationError("annealing.warmup_proposals must be >= 0");
    }
    if (schedule.restarts < 1) {
        throw ValidationError("annealing.restarts must be >= 1");
    }
}

NetworkState propose_neighbor(const NetworkState& state, double step_radius,
                              Rng& rng, const Topology& topo) {
    const auto& robots = topo.robots();
    // Three draws, always in this order, so proposal streams are replayable.
    size_t pick = static_cast<size_t>(rng.uniform() * static_cast<double>(robots.size()));
    pick = std::min(pick, robots.size() - 1);
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double angle = two_pi * rng.uniform();
    // sqrt makes the point uniform over the disc area, not clustered at the center.
    const double radius = step_radius * std::sqrt(rng.uniform());

    NetworkState next = state;
    const NodeId robot = robots[pick];
    const Position p = next.pos(robot);
    next.set_pos(robot, {p.x + radius * std::cos(angle), p.y + radius * std::sin(angle)});
    return next;
}

bool metropolis_accept(double c_old, double c_new, double temperature, Rng& rng) {
    if (c_new > c_old) {
        return true; // unconditional, no draw consumed
    }
    return rng.uniform() < std::exp(-(c_old - c_new) / temperature);
}

namespace {

AnnealResult anneal_chain(const NetworkState& initial, const AnnealingSchedule& schedule,
                          const ChannelParams& params, const Topology& topo,
                          std::uint64_t seed) {
    Rng rng(seed);

    AnnealResult result;
    NetworkState state = initial;
    NetworkEvaluation eval = evaluate_network(state, params, topo);
    double cost = eval.global;

    result.initial_cost = cost;
    result.best = state;
    result.best_cost = cost;

    // Calibration: a short accept-all random walk measures the typical cost
    // change of one proposal. Degenerate starting layouts (all robots
    // coincident) have a raw initial cost that is a uselessly small
    // temperature scale.
    double scale = cost;
    if (schedule.warmup_proposals > 0) {
        double accumulated = 0.0;
        for (long w = 0; w < schedule.warmup_proposals; ++w) {
            state = propose_neighbor(state, schedule.step_radius, rng, topo);
            eval = evaluate_network(state, params, topo);
            accumulated += std::fabs(eval.global - cost);
            cost = eval.global;
            if (cost > result.best_cost) {
                result.best = state;
                result.best_cost = cost;
            }
        }
        scale = accumulated / static_cast<double>(schedule.warmup_proposals);
    }
    const double t_base = std::max(schedule.t0 * scale, 1e-300);

    result.steps.reserve(static_cast<size_t>(schedule.iterations));
    result.states.reserve(static_cast<size_t>(schedule.iterations));
    result.flow_costs.reserve(static_cast<size_t>(schedule.iterations));

    std::vector<double> current_flow_costs = eval.flow_costs;

    for (long k = 0; k < schedule.iterations; ++k) {
        const long stage = k / schedule.steps_per_temperature;
        const double temperature = t_base * std::pow(schedule.alpha, static_cast<double>(stage));
        const double radius = std::max(
            schedule.step_radius * std::pow(schedule.radius_alpha, static_cast<double>(stage)),
            schedule.min_step_radius);

        NetworkState proposal = propose_neighbor(state, radius, rng, topo);
        proposal.iteration = k + 1;
        const NetworkEvaluation proposal_eval = evaluate_network(proposal, params, topo);
        const bool accepted = metropolis_accept(cost, proposal_eval.global, temperature, rng);

        if (accepted) {
            state = std::move(proposal);
            cost = proposal_eval.global;
            current_flow_costs = proposal_eval.flow_costs;
            if (cost > result.best_cost) {
                result.best = state;
                result.best_cost = cost;
            }
        } else {
            state.iteration = k + 1;
        }

        result.steps.push_back({k + 1, cost, accepted, temperature});
        result.states.push_back(state);
        result.flow_costs.push_back(current_flow_costs);
    }

    result.last = state;
    result.last_cost = cost;
    return result;
}

} // namespace

AnnealResult anneal(const NetworkState& initial, const AnnealingSchedule& schedule,
                    const ChannelParams& params, const Topology& topo,
                    std::uint64_t seed) {
    validate(schedule);
    AnnealResult best = anneal_chain(initial, schedule, params, topo, seed);
    for (long chain = 1; chain < schedule.restarts; ++chain) {
        AnnealResult candidate = anneal_chain(
            initial, schedule, params, topo,
            Rng::substream_seed(seed, static_cast<std::uint64_t>(chain)));
        if (candidate.best_cost > best.best_cost) {
            best = std::move(candidate);
        }
    }
    return best;
}

} // namespace minsinr
