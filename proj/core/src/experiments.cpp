#include "ssrelay/experiments.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "ssrelay/analysis.hpp"
#include "ssrelay/errors.hpp"

namespace ssrelay::experiments {
namespace {

constexpr double kMinOutageEvents = 10.0;

SystemConfig apply(SystemConfig cfg, SweepVariable variable, double value) {
    switch (variable) {
        case SweepVariable::cap_db:
            cfg.interference_cap_db = value;
            break;
        case SweepVariable::snr_db:
            cfg.snr_scale = db_to_linear(value);
            break;
        case SweepVariable::hops:
            cfg.hop_count = static_cast<int>(value);
            break;
    }
    return cfg;
}

double mean_shape(const std::vector<waterfill::HopLaw>& laws) {
    double sum = 0.0;
    for (const auto& law : laws) sum += law.shape_exact;
    return sum / static_cast<double>(laws.size());
}

CurvePoint evaluate(const RunConfig& run, double x, Metric metric, mc::EngineOptions engine) {
    const auto scenario = mc::make_scenario(run.system);
    std::vector<double> shapes;
    for (const auto& law : scenario.laws) shapes.push_back(law.shape_exact);
    const int k = run.system.hop_count;
    const double a = mean_shape(scenario.laws);

    CurvePoint p;
    p.x = x;
    p.trials = run.trials;
    p.seed = run.seed;

    if (metric == Metric::outage) {
        const double gamma_th = run.gamma_th();
        const auto est = mc::estimate_outage(scenario, gamma_th, run.trials, run.seed, engine);
        p.mc_value = est.value;
        p.mc_stderr = est.std_error;
        p.resolved = est.value * static_cast<double>(est.trials) >= kMinOutageEvents;
        const auto bounds = analysis::outage_bounds(gamma_th, shapes);
        p.bound_lower = bounds.lower;
        p.bound_upper = bounds.upper;
        if (k == 2) p.analytic_exact = analysis::e2e_cdf_k2(gamma_th, shapes[0], shapes[1]);
        if (k >= 2) {
            const auto norm = analysis::normalizer(k, a, analysis::BoundSide::upper);
            p.limit_approx = analysis::limiting_cdf(gamma_th / norm.scale);
        }
    } else {
        const auto est = mc::estimate_rate(scenario, run.trials, run.seed, engine);
        p.mc_value = est.value;
        p.mc_stderr = est.std_error;
        if (k == 2) p.analytic_exact = analysis::rate_k2(shapes[0], shapes[1]);
        if (k >= 2) {
            p.bound_upper = analysis::rate_bound(k, a);
            p.limit_approx = analysis::rate_approx(k, a);
        }
    }
    return p;
}

void put(std::ostream& out, double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, res.ptr - buf);
}

void put(std::ostream& out, const std::optional<double>& v) {
    if (v) put(out, *v);
}

SweepSpec sweep(SweepVariable variable, const std::vector<double>& values, RunConfig base) {
    return SweepSpec{variable, values, std::move(base)};
}

}  // namespace

std::string_view to_string(SweepVariable variable) {
    switch (variable) {
        case SweepVariable::cap_db: return "W_dB";
        case SweepVariable::snr_db: return "snr_dB";
        case SweepVariable::hops: return "K";
    }
    return "?";
}

std::string_view to_string(Metric metric) {
    return metric == Metric::outage ? "outage" : "rate";
}

Metric parse_metric(std::string_view text) {
    if (text == "outage") return Metric::outage;
    if (text == "rate") return Metric::rate;
    throw ConfigError("unknown metric '" + std::string(text) + "' (expected outage or rate)");
}

void SweepSpec::validate() const {
    if (values.empty()) throw ConfigError("sweep grid is empty");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1])) {
            throw ConfigError("sweep grid must be strictly increasing");
        }
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw ConfigError("sweep grid contains a non-finite value");
        if (variable == SweepVariable::hops && v != std::floor(v)) {
            throw ConfigError("hop-count sweep values must be integers");
        }
    }
    base.system.validate();
}

Curve run_sweep(const SweepSpec& spec, Metric metric, std::string name,
                mc::EngineOptions engine) {
    spec.validate();
    Curve curve{std::move(name), {}};
    for (double v : spec.values) {
        RunConfig run = spec.base;
        run.system = apply(run.system, spec.variable, v);
        run.system.validate();
        curve.points.push_back(evaluate(run, v, metric, engine));
    }
    return curve;
}

std::vector<Curve> run_figure(int id, const RunConfig& base, const FigureGrids& grids,
                              mc::EngineOptions engine) {
    const auto with = [&base](int hops, double cap_db, double snr_db) {
        RunConfig run = base;
        run.system.hop_count = hops;
        run.system.interference_cap_db = cap_db;
        run.system.snr_scale = db_to_linear(snr_db);
        return run;
    };
    const double snr = base.snr_db();

    std::vector<Curve> curves;
    switch (id) {
        case 3:
        case 6: {
            const Metric metric = id == 3 ? Metric::outage : Metric::rate;
            const std::string stem = id == 3 ? "fig3_outage_vs_W_K" : "fig6_rate_vs_W_K";
            for (int k : {2, 4, 8}) {
                curves.push_back(run_sweep(sweep(SweepVariable::cap_db, grids.cap_db,
                                                 with(k, base.system.interference_cap_db, snr)),
                                           metric, stem + std::to_string(k), engine));
            }
            break;
        }
        case 4:
        case 5: {
            const Metric metric = id == 4 ? Metric::outage : Metric::rate;
            const std::string stem = id == 4 ? "fig4_outage" : "fig5_rate";
            for (int w : {10, 30}) {
                curves.push_back(run_sweep(sweep(SweepVariable::snr_db, grids.snr_db,
                                                 with(4, w, snr)),
                                           metric, stem + "_vs_snr_W" + std::to_string(w),
                                           engine));
            }
            curves.push_back(run_sweep(sweep(SweepVariable::cap_db, grids.cap_db,
                                             with(4, base.system.interference_cap_db, 15.0)),
                                       metric, stem + "_vs_W_snr15", engine));
            break;
        }
        default:
            throw ConfigError("unknown figure " + std::to_string(id) + " (expected 3 to 6)");
    }
    return curves;
}

void write_csv(std::ostream& out, const Curve& curve) {
    out << kCsvHeader << '\n';
    for (const auto& p : curve.points) {
        put(out, p.x);
        out << ',';
        put(out, p.mc_value);
        out << ',';
        put(out, p.mc_stderr);
        out << ',';
        put(out, p.analytic_exact);
        out << ',';
        put(out, p.bound_lower);
        out << ',';
        put(out, p.bound_upper);
        out << ',';
        put(out, p.limit_approx);
        out << ',' << p.trials << ',' << p.seed << '\n';
    }
}

}  // namespace ssrelay::experiments
