#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace ssrelay {

/// How a hop whose water-filling power is zero enters the simulation.
enum class ZeroAtomMode {
    /// Redraw the hop's fading until it transmits; matches the analytic laws,
    /// which are all conditioned on transmission.
    conditioned,
    /// Keep the zero-power hop; the end-to-end SNR is then zero.
    physical,
};

std::string_view to_string(ZeroAtomMode mode);
ZeroAtomMode parse_zero_atom_mode(std::string_view text);

/// Scenario scalars shared by every hop.
struct SystemConfig {
    int hop_count = 4;                 ///< K
    double path_loss_exponent = 4.0;   ///< epsilon, >= 2
    double path_loss_ratio = 10.0;     ///< eta = (l/d)^epsilon
    double noise_variance = 1.0;       ///< sigma^2 at every receiving node
    double interference_cap_db = 10.0; ///< W, relative to the noise power
    double snr_scale = 1.0;            ///< linear average-SNR scale gamma-bar
    double constellation_const = 2.0;  ///< p (2 for BPSK)
    ZeroAtomMode zero_atom_mode = ZeroAtomMode::conditioned;

    /// Throws ConfigError when an invariant is violated.
    void validate() const;
    double interference_cap() const;
};

/// Per-hop distances; index k-1 holds hop k (SU_{k-1} -> SU_k).
struct Topology {
    std::vector<double> desired;       ///< d_k, SU_{k-1} to SU_k
    std::vector<double> interference;  ///< l_k, SU_{k-1} to the primary receiver

    std::size_t hop_count() const { return desired.size(); }
    /// (l_k / d_k)^epsilon for hop k (1-based).
    double path_loss_ratio(std::size_t hop, double path_loss_exponent) const;
};

/// Secondary nodes on a straight line, primary receiver at unit distance
/// perpendicular to the line at SU_{K/2}, and every hop holding
/// (l_k / d_k)^epsilon = eta.
///
/// Throws UnsupportedLayout for odd or non-positive K and DegenerateGeometry
/// when eta <= 1 (no node placement exists to the left of the foot).
Topology build_topology(int hop_count, double path_loss_ratio, double path_loss_exponent);

/// K identical hops with d = 1 and l = eta^(1/epsilon). Any K >= 1; used
/// when the geometry itself does not matter.
Topology uniform_topology(int hop_count, double path_loss_ratio, double path_loss_exponent);

double db_to_linear(double value_db);
double linear_to_db(double value);

}  // namespace ssrelay
