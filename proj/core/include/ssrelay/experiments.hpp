#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ssrelay/config.hpp"
#include "ssrelay/montecarlo.hpp"

namespace ssrelay::experiments {

enum class SweepVariable {
    cap_db,  ///< W in dB
    snr_db,  ///< gamma-bar in dB
    hops,    ///< K
};

enum class Metric { outage, rate };

std::string_view to_string(SweepVariable variable);
std::string_view to_string(Metric metric);
/// Accepts "outage" or "rate"; throws ConfigError otherwise.
Metric parse_metric(std::string_view text);

/// One-dimensional sweep around a base run configuration.
struct SweepSpec {
    SweepVariable variable = SweepVariable::cap_db;
    std::vector<double> values;  ///< nonempty, strictly increasing
    RunConfig base;

    /// Throws ConfigError on an empty or unsorted grid, or a non-integral
    /// hop count.
    void validate() const;
};

/// One CSV row. Analytic columns that do not apply stay empty.
struct CurvePoint {
    double x = 0.0;
    double mc_value = 0.0;
    double mc_stderr = 0.0;
    std::optional<double> analytic_exact;
    std::optional<double> bound_lower;
    std::optional<double> bound_upper;
    std::optional<double> limit_approx;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    /// False for outage estimates backed by fewer than 10 events.
    bool resolved = true;
};

struct Curve {
    std::string name;
    std::vector<CurvePoint> points;
};

/// Simulate and evaluate every analytic column at each sweep value. The
/// same seed is used at every point.
Curve run_sweep(const SweepSpec& spec, Metric metric, std::string name = "sweep",
                mc::EngineOptions engine = {});

/// Grids shared by the figure datasets.
struct FigureGrids {
    std::vector<double> cap_db = {0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30};
    std::vector<double> snr_db = {0, 5, 10, 15, 20, 25, 30};
};

/// Figure datasets 3 to 6. `base` supplies eta, epsilon, sigma^2, p, the
/// zero-atom mode, trials, seed and gamma_th; each curve then pins the hop
/// count, cap and SNR it sweeps over.
///
///   3: outage vs W, K = 2, 4, 8
///   4: outage vs SNR at W = 10 and 30 dB, outage vs W at SNR 15 dB, K = 4
///   5: rate, same three sweeps as 4
///   6: rate vs W, K = 2, 4, 8
///
/// Throws ConfigError for any other id.
std::vector<Curve> run_figure(int id, const RunConfig& base, const FigureGrids& grids = {},
                              mc::EngineOptions engine = {});

inline constexpr std::string_view kCsvHeader =
    "x,mc_value,mc_stderr,analytic_exact,bound_lower,bound_upper,limit_approx,trials,seed";

/// Header line followed by one row per point. Reals use the shortest
/// round-trip representation, so output is byte-stable.
void write_csv(std::ostream& out, const Curve& curve);

}  // namespace ssrelay::experiments
