#include "ssrelay/model.hpp"

#include <cmath>
#include <string>

#include "ssrelay/errors.hpp"

namespace ssrelay {

std::string_view to_string(ZeroAtomMode mode) {
    return mode == ZeroAtomMode::conditioned ? "conditioned" : "physical";
}

ZeroAtomMode parse_zero_atom_mode(std::string_view text) {
    if (text == "conditioned") return ZeroAtomMode::conditioned;
    if (text == "physical") return ZeroAtomMode::physical;
    throw ConfigError("zero_atom_mode must be \"conditioned\" or \"physical\", got \"" +
                      std::string(text) + "\"");
}

void SystemConfig::validate() const {
    if (hop_count < 1) throw ConfigError("K must be >= 1");
    if (!(path_loss_exponent >= 2.0)) throw ConfigError("epsilon must be >= 2");
    if (!(path_loss_ratio > 0.0)) throw ConfigError("eta must be > 0");
    if (!(noise_variance > 0.0)) throw ConfigError("sigma2 must be > 0");
    if (!std::isfinite(interference_cap_db)) throw ConfigError("W_dB must be finite");
    if (!(snr_scale > 0.0) || !std::isfinite(snr_scale)) {
        throw ConfigError("average SNR scale must be positive and finite");
    }
    if (!(constellation_const > 0.0)) throw ConfigError("p must be > 0");
}

double SystemConfig::interference_cap() const { return db_to_linear(interference_cap_db); }

double Topology::path_loss_ratio(std::size_t hop, double path_loss_exponent) const {
    return std::pow(interference.at(hop - 1) / desired.at(hop - 1), path_loss_exponent);
}

Topology build_topology(int hop_count, double path_loss_ratio, double path_loss_exponent) {
    if (hop_count < 2 || hop_count % 2 != 0) {
        throw UnsupportedLayout("linear-chain layout needs an even hop count >= 2, got K = " +
                                std::to_string(hop_count));
    }
    if (!(path_loss_exponent >= 2.0)) throw ConfigError("epsilon must be >= 2");
    if (!(path_loss_ratio > 1.0)) {
        throw DegenerateGeometry(
            "eta must exceed 1: hops left of the perpendicular foot have no placement");
    }

    // d_k = c l_k for every hop.
    const double c = std::pow(path_loss_ratio, -1.0 / path_loss_exponent);
    const auto k = static_cast<std::size_t>(hop_count);
    const std::size_t half = k / 2;

    Topology topo;
    topo.desired.resize(k);
    topo.interference.resize(k);

    // Rightward: hop half+1 starts at the foot. `offset` is the transmitter's
    // distance from the foot along the line.
    double offset = 0.0;
    for (std::size_t hop = half + 1; hop <= k; ++hop) {
        const double l = std::hypot(1.0, offset);
        const double d = c * l;
        topo.interference[hop - 1] = l;
        topo.desired[hop - 1] = d;
        offset += d;
    }

    // Leftward: the receiver of hop `hop` sits at offset x (x_{K/2} = 0), the
    // transmitter at y > x with y - x = c sqrt(1 + y^2). Larger root of
    // (1 - c^2) y^2 - 2 x y + x^2 - c^2 = 0.
    double x = 0.0;
    const double one_minus_c2 = 1.0 - c * c;
    for (std::size_t hop = half; hop >= 1; --hop) {
        const double y = (x + c * std::sqrt(x * x + one_minus_c2)) / one_minus_c2;
        topo.interference[hop - 1] = std::hypot(1.0, y);
        topo.desired[hop - 1] = y - x;
        x = y;
    }
    return topo;
}

Topology uniform_topology(int hop_count, double path_loss_ratio, double path_loss_exponent) {
    if (hop_count < 1) throw ConfigError("K must be >= 1");
    if (!(path_loss_ratio > 0.0)) throw ConfigError("eta must be > 0");
    const double l = std::pow(path_loss_ratio, 1.0 / path_loss_exponent);
    const auto k = static_cast<std::size_t>(hop_count);
    return Topology{std::vector<double>(k, 1.0), std::vector<double>(k, l)};
}

double db_to_linear(double value_db) { return std::pow(10.0, value_db / 10.0); }

double linear_to_db(double value) { return 10.0 * std::log10(value); }

}  // namespace ssrelay
