// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "minsinr/geometry.hpp"
#include "minsinr/rng.hpp"

namespace minsinr {

/// Radio parameters shared by every link evaluation.
/// All powers are linear units; dB appears only in fading_sigma.
struct ChannelParams {
    double eta = 2.0;           ///< path-loss exponent
    double p_t = 1.0;           ///< transmitter node power
    double p_m = 1.0;           ///< robot node power
    double p_n = 0.0;           ///< noise power at every receiver
    double fading_sigma = 0.0;  ///< log-normal fading std-dev in dB; 0 disables
    double min_distance = 0.1;  ///< clamp below which path loss stops growing

    bool operator==(const ChannelParams&) const = default;
};

/// Throws ValidationError naming the first field out of range.
void validate(const ChannelParams& params);

/// One in-band emitter seen at a receiver.
struct Interferer {
    Position pos;
    double power;
};

/// Power received at distance d from a node transmitting at p_tx:
/// p_tx * max(d, min_distance)^(-eta). The clamp keeps the value finite
/// for coincident nodes.
double received_power(double p_tx, double d, const ChannelParams& params);

/// Signal-to-interference-plus-noise ratio of one link:
/// desired received power over (sum of interfering received powers + p_n).
/// Throws Error when the denominator is exactly zero (no noise and no
/// interference); an infinity sentinel would poison downstream minima.
double link_sinr(Position tx_pos, Position rx_pos, double tx_power,
                 const std::vector<Interferer>& interferers,
                 const ChannelParams& params);

/// Fading variant: every power term is scaled by an independent seeded
/// log-normal draw of fading_sigma dB. Exercised only when fading_sigma > 0;
/// optimization and acceptance paths always evaluate the pure version.
double link_sinr_faded(Position tx_pos, Position rx_pos, double tx_power,
                       const std::vector<Interferer>& interferers,
                       const ChannelParams& params, Rng& rng);

} // namespace minsinr
