#pragma once

#include <vector>

#include "ssrelay/model.hpp"

namespace ssrelay::waterfill {

/// Large-scale quantities one hop's power rule depends on.
struct HopChannel {
    double path_loss_ratio;  ///< eta
    double noise_variance;   ///< sigma^2
    double snr_scale;        ///< gamma-bar
};

/// Per-hop law of the water-filling SNR.
///
/// Conditioned on transmission, gamma_k has CDF 1 - a / (gamma + a); the hop
/// stays silent with probability 1 / a.
struct HopLaw {
    double water_level;   ///< lambda
    double shape_exact;   ///< a = gamma-bar lambda eta / sigma^2 + 1
    double shape_approx;  ///< a0 = gamma-bar lambda eta / sigma^2
    double zero_prob;     ///< 1 / a
};

/// Average interference power at the primary receiver produced by the
/// water-filling rule with water level `lambda`, averaged over unit-mean
/// Rayleigh fading on both links:
///
///   lambda - (sigma^2 / (gamma-bar eta)) ln(1 + gamma-bar eta lambda / sigma^2)
///
/// Strictly increasing in lambda, zero at lambda = 0.
double constraint_lhs(double lambda, const HopChannel& channel);

/// d/d lambda of constraint_lhs.
double constraint_slope(double lambda, const HopChannel& channel);

/// Water level that meets the average interference cap 10^(W/10) with
/// equality (relative residual <= 1e-10).
double water_level(const HopChannel& channel, double cap_db);

HopLaw hop_law(const HopChannel& channel, double cap_db);

/// One law per hop of `topo`, computed off-line from each hop's own eta.
std::vector<HopLaw> hop_laws(const SystemConfig& config, const Topology& topo);

/// Instantaneous link state of one hop.
struct LinkState {
    double desired_gain;       ///< |f|^2
    double interference_gain;  ///< |h|^2
    double desired_distance;   ///< d
    double interference_distance;  ///< l
};

/// Water-filling transmit power
///   [lambda / (l^-eps |h|^2) - sigma^2 / (gamma-bar d^-eps |f|^2)]^+.
double optimal_power(double lambda, const LinkState& link, double noise_variance,
                     double snr_scale, double path_loss_exponent);

/// Received SNR [a0 |f|^2 / |h|^2 - 1]^+ of a hop transmitting at
/// optimal_power.
double hop_snr(const HopLaw& law, double desired_gain, double interference_gain);

}  // namespace ssrelay::waterfill
