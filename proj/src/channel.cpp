// SPDX-License-Identifier: Apache-2.0
#include "minsinr/channel.hpp"

#include <cmath>
#include <string>

#include "minsinr/errors.hpp"

namespace minsinr {

void validate(const ChannelParams& params) {
    if (!(params.eta > 0.0) || !std::isfinite(params.eta)) {
        throw ValidationError("channel.eta must be > 0");
    }
    if (!(params.p_t > 0.0) || !std::isfinite(params.p_t)) {
        throw ValidationError("channel.p_t must be > 0");
    }
    if (!(params.p_m > 0.0) || !std::isfinite(params.p_m)) {
        throw ValidationError("channel.p_m must be > 0");
    }
    if (!(params.p_n >= 0.0) || !std::isfinite(params.p_n)) {
        throw ValidationError("channel.p_n must be >= 0");
    }
    if (!(params.fading_sigma >= 0.0) || !std::isfinite(params.fading_sigma)) {
        throw ValidationError("channel.fading_sigma must be >= 0");
    }
    if (!(params.min_distance > 0.0) || !std::isfinite(params.min_distance)) {
        throw ValidationError("channel.min_distance must be > 0");
    }
}

double received_power(double p_tx, double d, const ChannelParams& params) {
    const double clamped = std::max(d, params.min_distance);
    return p_tx * std::pow(clamped, -params.eta);
}

double link_sinr(Position tx_pos, Position rx_pos, double tx_power,
                 const std::vector<Interferer>& interferers,
                 const ChannelParams& params) {
    const double desired = received_power(tx_power, distance(tx_pos, rx_pos), params);
    double denominator = params.p_n;
    for (const Interferer& it : interferers) {
        denominator += received_power(it.power, distance(it.pos, rx_pos), params);
    }
    if (denominator == 0.0) {
        throw Error("link_sinr: undefined ratio, zero noise power and no interference");
    }
    return desired / denominator;
}

namespace {

// Log-normal fading factor: 10^(psi_dB / 10) with psi_dB ~ N(0, sigma).
double fading_factor(double sigma_db, Rng& rng) {
    return std::pow(10.0, sigma_db * rng.gaussian() / 10.0);
}

} // namespace

double link_sinr_faded(Position tx_pos, Position rx_pos, double tx_power,
                       const std::vector<Interferer>& interferers,
                       const ChannelParams& params, Rng& rng) {
    if (params.fading_sigma == 0.0) {
        return link_sinr(tx_pos, rx_pos, tx_power, interferers, params);
    }
    const double desired = fading_factor(params.fading_sigma, rng) *
                           received_power(tx_power, distance(tx_pos, rx_pos), params);
    double denominator = params.p_n;
    for (const Interferer& it : interferers) {
        denominator += fading_factor(params.fading_sigma, rng) *
                       received_power(it.power, distance(it.pos, rx_pos), params);
    }
    if (denominator == 0.0) {
        throw Error("link_sinr: undefined ratio, zero noise power and no interference");
    }
    return desired / denominator;
}

} // namespace minsinr
