#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ssrelay/model.hpp"
#include "ssrelay/waterfill.hpp"

namespace ssrelay::mc {

/// Which fading coefficient of a hop a draw belongs to.
enum class Role : std::uint32_t {
    desired = 0,       ///< |f_k|^2
    interference = 1,  ///< |h_k|^2
};

/// Full coordinates of one random draw. Every field feeds the Philox counter
/// or key, so draws never depend on evaluation order or thread count, and a
/// conditioning redraw (`draw` > 0) on one hop leaves other hops untouched.
struct StreamKey {
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    std::uint32_t hop = 0;
    Role role = Role::desired;
    std::uint32_t draw = 0;
};

/// Uniform on [0, 1) with 53 random bits.
double uniform(const StreamKey& key);

/// Inverse-CDF unit exponential, -ln(1 - u).
double exponential_from_uniform(double u);

/// Unit-mean exponential fading power |f|^2 or |h|^2 for `key`.
double sample_hop(const StreamKey& key);

/// Fading power pairs for one trial.
struct ChannelSample {
    std::vector<double> desired_gain;       ///< |f_k|^2, k = 1..K
    std::vector<double> interference_gain;  ///< |h_k|^2
};

/// Draw-0 channel realization of `trial`.
ChannelSample draw_channels(std::uint64_t seed, std::uint64_t trial, int hop_count);

struct TrialResult {
    std::vector<double> hop_snr;
    double e2e_snr = 0.0;
    double bound_lower = 0.0;  ///< min_k gamma_k / K
    double bound_upper = 0.0;  ///< min_k gamma_k
};

/// (sum 1/gamma_k)^-1, or 0 if any hop is silent.
double e2e_snr(std::span<const double> hop_snrs);

/// End-to-end SNR and its min-based bounds from per-hop SNRs.
TrialResult combine_hops(std::vector<double> hop_snrs);

/// Configuration, geometry and the off-line per-hop laws of one scenario.
struct Scenario {
    SystemConfig config;
    Topology topology;
    std::vector<waterfill::HopLaw> laws;

    /// Laws computed from `topology`.
    Scenario(SystemConfig config, Topology topology);
};

/// Scenario on the canonical linear-chain layout (even K only).
Scenario make_scenario(const SystemConfig& config);

/// SNR of hop `hop` (1-based) in `trial`. In conditioned mode the hop is
/// redrawn until it transmits.
double draw_hop_snr(const waterfill::HopLaw& law, ZeroAtomMode mode, std::uint64_t seed,
                    std::uint64_t trial, std::uint32_t hop);

TrialResult run_trial(const Scenario& scenario, std::uint64_t seed, std::uint64_t trial);

/// Monte-Carlo estimate with its standard error.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct EngineOptions {
    /// Worker threads; 0 selects std::thread::hardware_concurrency().
    unsigned workers = 0;
};

/// Per-trial statistic reduced by estimate_mean.
using TrialStatistic = std::function<double(const TrialResult&)>;

/// Sample mean of `statistic` over trials 0..trials-1 with
/// std_error = sample-std / sqrt(trials). Bit-identical for any worker
/// count: trials are summed in fixed-size blocks, blocks reduced in order.
Estimate estimate_mean(const Scenario& scenario, std::uint64_t trials, std::uint64_t seed,
                       const TrialStatistic& statistic, EngineOptions options = {});

/// Fraction of trials with e2e SNR below gamma_th, binomial standard error.
Estimate estimate_outage(const Scenario& scenario, double gamma_th, std::uint64_t trials,
                         std::uint64_t seed, EngineOptions options = {});

/// Mean of (1/K) log2(1 + e2e SNR) in bit/s/Hz.
Estimate estimate_rate(const Scenario& scenario, std::uint64_t trials, std::uint64_t seed,
                       EngineOptions options = {});

/// n independent hop-1 SNR draws from `law` (trial index 0..n-1).
std::vector<double> sample_hop_snrs(const waterfill::HopLaw& law, ZeroAtomMode mode,
                                    std::uint64_t count, std::uint64_t seed);

/// Right-continuous empirical distribution function.
class EmpiricalCdf {
public:
    /// Throws DomainError on empty input.
    explicit EmpiricalCdf(std::vector<double> samples);

    /// Fraction of samples <= x.
    double operator()(double x) const;

    /// Distinct sorted values with the CDF level reached at each.
    std::vector<std::pair<double, double>> table() const;

    /// sup_x |F_n(x) - cdf(x)| for a continuous reference cdf.
    double sup_distance(const std::function<double(double)>& cdf) const;

    std::size_t size() const { return sorted_.size(); }

private:
    std::vector<double> sorted_;
};

}  // namespace ssrelay::mc
