#include "ssrelay/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "ssrelay/errors.hpp"
#include "ssrelay/philox.hpp"

namespace ssrelay::mc {
namespace {

constexpr std::uint64_t kBlockTrials = 4096;
constexpr std::uint32_t kMaxRedraws = 1u << 20;

Philox4x32::Counter counter_for(const StreamKey& key) {
    if (key.draw >= (1u << 31)) throw InternalError("stream draw index overflow");
    return {static_cast<std::uint32_t>(key.trial), static_cast<std::uint32_t>(key.trial >> 32),
            key.hop, (static_cast<std::uint32_t>(key.role) << 31) | key.draw};
}

struct BlockSums {
    double sum = 0.0;
    double sum_sq = 0.0;
};

template <typename PerTrial>
std::vector<BlockSums> run_blocks(std::uint64_t trials, EngineOptions options,
                                  const PerTrial& per_trial) {
    const std::uint64_t blocks = (trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<BlockSums> out(blocks);

    unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
    workers = static_cast<unsigned>(
        std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(blocks, 1)));

    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t b = next++; b < blocks; b = next++) {
            BlockSums acc;
            const std::uint64_t end = std::min(trials, (b + 1) * kBlockTrials);
            for (std::uint64_t t = b * kBlockTrials; t < end; ++t) {
                const double x = per_trial(t);
                acc.sum += x;
                acc.sum_sq += x * x;
            }
            out[b] = acc;
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    return out;
}

BlockSums reduce(const std::vector<BlockSums>& blocks) {
    BlockSums total;
    for (const auto& b : blocks) {
        total.sum += b.sum;
        total.sum_sq += b.sum_sq;
    }
    return total;
}

void require_trials(std::uint64_t trials) {
    if (trials == 0) throw DomainError("trials must be >= 1");
}

}  // namespace

double uniform(const StreamKey& key) {
    const auto words = Philox4x32::generate(
        counter_for(key), {static_cast<std::uint32_t>(key.seed),
                           static_cast<std::uint32_t>(key.seed >> 32)});
    const std::uint64_t bits = (std::uint64_t{words[0]} << 32) | words[1];
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double exponential_from_uniform(double u) { return -std::log1p(-u); }

double sample_hop(const StreamKey& key) { return exponential_from_uniform(uniform(key)); }

ChannelSample draw_channels(std::uint64_t seed, std::uint64_t trial, int hop_count) {
    ChannelSample sample;
    const auto k = static_cast<std::size_t>(hop_count);
    sample.desired_gain.resize(k);
    sample.interference_gain.resize(k);
    for (std::uint32_t hop = 1; hop <= k; ++hop) {
        sample.desired_gain[hop - 1] = sample_hop({seed, trial, hop, Role::desired, 0});
        sample.interference_gain[hop - 1] = sample_hop({seed, trial, hop, Role::interference, 0});
    }
    return sample;
}

double e2e_snr(std::span<const double> hop_snrs) {
    if (hop_snrs.size() == 1) return std::max(hop_snrs[0], 0.0);
    double inverse_sum = 0.0;
    for (double g : hop_snrs) {
        if (!(g > 0.0)) return 0.0;
        inverse_sum += 1.0 / g;
    }
    return 1.0 / inverse_sum;
}

TrialResult combine_hops(std::vector<double> hop_snrs) {
    TrialResult r;
    r.e2e_snr = e2e_snr(hop_snrs);
    r.bound_upper = hop_snrs.empty() ? 0.0 : *std::min_element(hop_snrs.begin(), hop_snrs.end());
    r.bound_lower = r.bound_upper / static_cast<double>(hop_snrs.size());
    r.hop_snr = std::move(hop_snrs);
    return r;
}

Scenario::Scenario(SystemConfig cfg, Topology topo)
    : config(std::move(cfg)), topology(std::move(topo)),
      laws(waterfill::hop_laws(config, topology)) {}

Scenario make_scenario(const SystemConfig& config) {
    config.validate();
    return Scenario(config, build_topology(config.hop_count, config.path_loss_ratio,
                                           config.path_loss_exponent));
}

double draw_hop_snr(const waterfill::HopLaw& law, ZeroAtomMode mode, std::uint64_t seed,
                    std::uint64_t trial, std::uint32_t hop) {
    for (std::uint32_t draw = 0; draw < kMaxRedraws; ++draw) {
        const double f2 = sample_hop({seed, trial, hop, Role::desired, draw});
        const double h2 = sample_hop({seed, trial, hop, Role::interference, draw});
        // h2 == 0 (probability 2^-53) would give an infinite SNR.
        if (h2 == 0.0) continue;
        const double snr = waterfill::hop_snr(law, f2, h2);
        if (snr > 0.0 || mode == ZeroAtomMode::physical) return snr;
    }
    throw NumericalFailure("hop " + std::to_string(hop) +
                           " never transmitted; zero-power probability too close to 1");
}

TrialResult run_trial(const Scenario& scenario, std::uint64_t seed, std::uint64_t trial) {
    std::vector<double> snrs(scenario.laws.size());
    for (std::uint32_t hop = 1; hop <= snrs.size(); ++hop) {
        snrs[hop - 1] = draw_hop_snr(scenario.laws[hop - 1], scenario.config.zero_atom_mode,
                                     seed, trial, hop);
    }
    return combine_hops(std::move(snrs));
}

Estimate estimate_mean(const Scenario& scenario, std::uint64_t trials, std::uint64_t seed,
                       const TrialStatistic& statistic, EngineOptions options) {
    require_trials(trials);
    const auto total = reduce(run_blocks(trials, options, [&](std::uint64_t t) {
        return statistic(run_trial(scenario, seed, t));
    }));
    const double n = static_cast<double>(trials);
    const double mean = total.sum / n;
    double stderr_value = 0.0;
    if (trials > 1) {
        const double var = std::max(0.0, (total.sum_sq - n * mean * mean) / (n - 1.0));
        stderr_value = std::sqrt(var / n);
    }
    return Estimate{mean, stderr_value, trials, seed};
}

Estimate estimate_outage(const Scenario& scenario, double gamma_th, std::uint64_t trials,
                         std::uint64_t seed, EngineOptions options) {
    require_trials(trials);
    const auto total = reduce(run_blocks(trials, options, [&](std::uint64_t t) {
        return run_trial(scenario, seed, t).e2e_snr < gamma_th ? 1.0 : 0.0;
    }));
    const double n = static_cast<double>(trials);
    const double p = total.sum / n;
    return Estimate{p, std::sqrt(p * (1.0 - p) / n), trials, seed};
}

Estimate estimate_rate(const Scenario& scenario, std::uint64_t trials, std::uint64_t seed,
                       EngineOptions options) {
    const double hops = static_cast<double>(scenario.laws.size());
    return estimate_mean(
        scenario, trials, seed,
        [hops](const TrialResult& r) { return std::log2(1.0 + r.e2e_snr) / hops; }, options);
}

std::vector<double> sample_hop_snrs(const waterfill::HopLaw& law, ZeroAtomMode mode,
                                    std::uint64_t count, std::uint64_t seed) {
    std::vector<double> out(count);
    for (std::uint64_t i = 0; i < count; ++i) out[i] = draw_hop_snr(law, mode, seed, i, 1);
    return out;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
    if (sorted_.empty()) throw DomainError("EmpiricalCdf: no samples");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

std::vector<std::pair<double, double>> EmpiricalCdf::table() const {
    std::vector<std::pair<double, double>> out;
    const double n = static_cast<double>(sorted_.size());
    for (std::size_t i = 0; i < sorted_.size(); ++i) {
        if (i + 1 < sorted_.size() && sorted_[i + 1] == sorted_[i]) continue;
        out.emplace_back(sorted_[i], static_cast<double>(i + 1) / n);
    }
    return out;
}

double EmpiricalCdf::sup_distance(const std::function<double(double)>& cdf) const {
    const double n = static_cast<double>(sorted_.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < sorted_.size(); ++i) {
        const double f = cdf(sorted_[i]);
        worst = std::max({worst, std::abs(static_cast<double>(i + 1) / n - f),
                          std::abs(static_cast<double>(i) / n - f)});
    }
    return worst;
}

}  // namespace ssrelay::mc
