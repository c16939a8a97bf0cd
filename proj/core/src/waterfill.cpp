#include "ssrelay/waterfill.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ssrelay/errors.hpp"

namespace ssrelay::waterfill {
namespace {

// u - ln(1 + u), accurate for small u.
double excess_over_log(double u) {
    if (u < 0.1) {
        // u^2/2 - u^3/3 + u^4/4 - ...
        double power = u * u;
        double sum = 0.0;
        for (int n = 2; n < 40; ++n) {
            const double term = power / n;
            sum += (n % 2 == 0) ? term : -term;
            if (term <= 1e-17 * sum) break;
            power *= u;
        }
        return sum;
    }
    return u - std::log1p(u);
}

double log_scale(const HopChannel& ch) {
    return ch.noise_variance / (ch.snr_scale * ch.path_loss_ratio);
}

void check_channel(const HopChannel& ch) {
    if (!(ch.path_loss_ratio > 0.0 && ch.noise_variance > 0.0 && ch.snr_scale > 0.0)) {
        throw DomainError("waterfill: eta, sigma^2 and the SNR scale must be positive");
    }
}

}  // namespace

double constraint_lhs(double lambda, const HopChannel& channel) {
    check_channel(channel);
    if (lambda <= 0.0) return 0.0;
    const double b = log_scale(channel);
    return b * excess_over_log(lambda / b);
}

double constraint_slope(double lambda, const HopChannel& channel) {
    check_channel(channel);
    if (lambda <= 0.0) return 0.0;
    return lambda / (lambda + log_scale(channel));
}

double water_level(const HopChannel& channel, double cap_db) {
    check_channel(channel);
    const double cap = db_to_linear(cap_db);
    if (!(cap > 0.0) || !std::isfinite(cap)) {
        throw DomainError("water_level: cap must be positive and finite");
    }
    const double b = log_scale(channel);

    double lo = 0.0;
    double hi = cap + b * (1.0 + std::log1p(10.0 * cap / b));
    if (!(constraint_lhs(hi, channel) >= cap)) {
        throw InternalError("water_level: upper bracket does not reach the cap");
    }

    while (hi - lo > 1e-3 * hi) {
        const double mid = 0.5 * (lo + hi);
        (constraint_lhs(mid, channel) < cap ? lo : hi) = mid;
    }

    double lambda = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        const double residual = constraint_lhs(lambda, channel) - cap;
        (residual < 0.0 ? lo : hi) = lambda;
        double next = lambda - residual / constraint_slope(lambda, channel);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const bool done = std::abs(next - lambda) <= 1e-15 * lambda;
        lambda = next;
        if (done) break;
    }

    const double rel = std::abs(constraint_lhs(lambda, channel) - cap) / cap;
    if (rel > 1e-10) {
        throw InternalError("water_level: residual " + std::to_string(rel) +
                            " above tolerance");
    }
    return lambda;
}

HopLaw hop_law(const HopChannel& channel, double cap_db) {
    const double lambda = water_level(channel, cap_db);
    const double a0 =
        channel.snr_scale * lambda * channel.path_loss_ratio / channel.noise_variance;
    const double a = a0 + 1.0;
    return HopLaw{lambda, a, a0, 1.0 / a};
}

std::vector<HopLaw> hop_laws(const SystemConfig& config, const Topology& topo) {
    config.validate();
    if (topo.hop_count() != static_cast<std::size_t>(config.hop_count)) {
        throw ConfigError("topology has " + std::to_string(topo.hop_count()) +
                          " hops, config expects " + std::to_string(config.hop_count));
    }
    std::vector<HopLaw> laws;
    laws.reserve(topo.hop_count());
    for (std::size_t k = 1; k <= topo.hop_count(); ++k) {
        const HopChannel ch{topo.path_loss_ratio(k, config.path_loss_exponent),
                            config.noise_variance, config.snr_scale};
        laws.push_back(hop_law(ch, config.interference_cap_db));
    }
    return laws;
}

double optimal_power(double lambda, const LinkState& link, double noise_variance,
                     double snr_scale, double path_loss_exponent) {
    const double interference_path =
        std::pow(link.interference_distance, -path_loss_exponent) * link.interference_gain;
    const double desired_path =
        std::pow(link.desired_distance, -path_loss_exponent) * link.desired_gain;
    const double power = lambda / interference_path - noise_variance / (snr_scale * desired_path);
    return std::max(power, 0.0);
}

double hop_snr(const HopLaw& law, double desired_gain, double interference_gain) {
    return std::max(law.shape_approx * desired_gain / interference_gain - 1.0, 0.0);
}

}  // namespace ssrelay::waterfill
