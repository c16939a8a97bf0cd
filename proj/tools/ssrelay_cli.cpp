// ssrelay: command-line front end for the relay-chain simulator.
//
//   ssrelay topology   --config run.json
//   ssrelay waterlevel --config run.json
//   ssrelay simulate   --config run.json --metric rate --trials 100000
//   ssrelay analyze    --config run.json
//   ssrelay figure     --figure 3 --out data/
//
// Exit status: 0 success, 2 usage or configuration error, 1 numerical failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ssrelay/analysis.hpp"
#include "ssrelay/config.hpp"
#include "ssrelay/errors.hpp"
#include "ssrelay/experiments.hpp"
#include "ssrelay/montecarlo.hpp"

namespace {

using namespace ssrelay;
using nlohmann::json;

constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    int figure = 0;
    std::string metric = "outage";
    unsigned workers = 0;
};

RunConfig load(const Options& opt) {
    RunConfig cfg = opt.config_path.empty() ? RunConfig{} : load_run_config(opt.config_path);
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.trials) {
        if (*opt.trials == 0) throw ConfigError("--trials must be >= 1");
        cfg.trials = *opt.trials;
    }
    return cfg;
}

// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ConfigError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void warn_unresolved(const experiments::Curve& curve) {
    for (const auto& p : curve.points) {
        if (!p.resolved) {
            std::cerr << "warning: " << curve.name << " x=" << p.x
                      << ": fewer than 10 outage events, estimate statistically unresolved\n";
        }
    }
}

void cmd_topology(const Options& opt) {
    const auto cfg = load(opt);
    const auto& s = cfg.system;
    const auto topo = build_topology(s.hop_count, s.path_loss_ratio, s.path_loss_exponent);
    Sink sink(opt.out_path);
    auto& out = sink.stream();
    out << "hop,desired_distance,interference_distance,path_loss_ratio\n";
    out.precision(17);
    for (std::size_t k = 1; k <= topo.hop_count(); ++k) {
        out << k << ',' << topo.desired[k - 1] << ',' << topo.interference[k - 1] << ','
            << topo.path_loss_ratio(k, s.path_loss_exponent) << '\n';
    }
}

void cmd_waterlevel(const Options& opt) {
    const auto cfg = load(opt);
    const auto scenario = mc::make_scenario(cfg.system);
    Sink sink(opt.out_path);
    auto& out = sink.stream();
    out << "hop,path_loss_ratio,water_level,shape_exact,shape_approx,zero_prob\n";
    out.precision(17);
    for (std::size_t k = 1; k <= scenario.laws.size(); ++k) {
        const auto& law = scenario.laws[k - 1];
        out << k << ',' << scenario.topology.path_loss_ratio(k, cfg.system.path_loss_exponent)
            << ',' << law.water_level << ',' << law.shape_exact << ',' << law.shape_approx << ','
            << law.zero_prob << '\n';
    }
}

void cmd_simulate(const Options& opt) {
    const auto cfg = load(opt);
    experiments::SweepSpec spec{experiments::SweepVariable::cap_db,
                                {cfg.system.interference_cap_db}, cfg};
    const auto curve = experiments::run_sweep(spec, experiments::parse_metric(opt.metric),
                                              "simulate", {opt.workers});
    warn_unresolved(curve);
    Sink sink(opt.out_path);
    experiments::write_csv(sink.stream(), curve);
}

void cmd_analyze(const Options& opt) {
    const auto cfg = load(opt);
    const auto& s = cfg.system;
    const auto scenario = mc::make_scenario(s);
    std::vector<double> shapes;
    json hops = json::array();
    for (std::size_t k = 1; k <= scenario.laws.size(); ++k) {
        const auto& law = scenario.laws[k - 1];
        shapes.push_back(law.shape_exact);
        hops.push_back({{"hop", k},
                        {"desired_distance", scenario.topology.desired[k - 1]},
                        {"interference_distance", scenario.topology.interference[k - 1]},
                        {"water_level", law.water_level},
                        {"shape_exact", law.shape_exact},
                        {"shape_approx", law.shape_approx},
                        {"zero_prob", law.zero_prob}});
    }

    const int k = s.hop_count;
    const double a = shapes.front();
    const double lambda = scenario.laws.front().water_level;
    const double gamma_th = cfg.gamma_th();
    const auto bounds = analysis::outage_bounds(gamma_th, shapes);
    const auto upper = analysis::normalizer(k, a, analysis::BoundSide::upper);
    const auto lower = analysis::normalizer(k, a, analysis::BoundSide::lower);
    const auto g = analysis::gains(k, lambda, s.path_loss_ratio, s.noise_variance,
                                   s.constellation_const, s.snr_scale);
    const double x = analysis::rate_argument(k, a);

    json outage = {{"gamma_th", gamma_th},
                   {"laplace_inversion", analysis::e2e_cdf(gamma_th, shapes)},
                   {"bound_lower", bounds.lower},
                   {"bound_upper", bounds.upper},
                   {"limit", analysis::limiting_cdf(gamma_th / upper.scale)}};
    json rate = {{"argument", x},
                 {"bound", analysis::rate_bound(k, a)},
                 {"approx", analysis::rate_approx(k, a)},
                 {"approx_valid", analysis::rate_approx_valid(x)}};
    if (k == 2) {
        outage["closed_form"] = analysis::e2e_cdf_k2(gamma_th, shapes[0], shapes[1]);
        rate["exact"] = analysis::rate_k2(shapes[0], shapes[1]);
    }

    json report = {{"config", json::parse(to_json(cfg))},
                   {"hops", hops},
                   {"outage", outage},
                   {"normalizer", {{"upper", upper.scale}, {"lower", lower.scale}}},
                   {"gains",
                    {{"exponent", g.exponent},
                     {"coefficient", g.coefficient},
                     {"diversity_gain", g.diversity_gain},
                     {"coding_gain", g.coding_gain}}},
                   {"rate", rate}};
    Sink sink(opt.out_path);
    sink.stream() << report.dump(2) << '\n';
}

void cmd_figure(const Options& opt) {
    const auto cfg = load(opt);
    const auto curves = experiments::run_figure(opt.figure, cfg, {}, {opt.workers});
    for (const auto& c : curves) warn_unresolved(c);

    if (opt.out_path.empty()) {
        for (const auto& c : curves) {
            std::cout << "# " << c.name << '\n';
            experiments::write_csv(std::cout, c);
        }
        return;
    }
    const std::filesystem::path dir(opt.out_path);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + dir.string());
    for (const auto& c : curves) {
        const auto path = dir / (c.name + ".csv");
        std::ofstream f(path);
        if (!f) throw ConfigError("cannot open output file " + path.string());
        experiments::write_csv(f, c);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectrum-sharing multi-hop AF relay simulator"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&opt](CLI::App* sub) {
        sub->add_option("--config", opt.config_path, "JSON run configuration")
            ->check(CLI::ExistingFile);
        sub->add_option("--out", opt.out_path, "Output file (directory for figure)");
    };
    const auto add_engine = [&opt](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "Override the config seed");
        sub->add_option("--trials", opt.trials, "Override the config trial count");
        sub->add_option("--workers", opt.workers, "Worker threads (0 = all cores)");
    };

    auto* topology = app.add_subcommand("topology", "Per-hop distances of the linear chain");
    add_common(topology);
    auto* waterlevel = app.add_subcommand("waterlevel", "Per-hop water levels and shape parameters");
    add_common(waterlevel);
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo estimate at one operating point");
    add_common(simulate);
    add_engine(simulate);
    simulate->add_option("--metric", opt.metric, "outage or rate")
        ->check(CLI::IsMember({"outage", "rate"}));
    auto* analyze = app.add_subcommand("analyze", "Analytic report as JSON");
    add_common(analyze);
    auto* figure = app.add_subcommand("figure", "Figure datasets as CSV");
    add_common(figure);
    add_engine(figure);
    figure->add_option("--figure", opt.figure, "Figure id")
        ->required()
        ->check(CLI::Range(3, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*topology) cmd_topology(opt);
        if (*waterlevel) cmd_waterlevel(opt);
        if (*simulate) cmd_simulate(opt);
        if (*analyze) cmd_analyze(opt);
        if (*figure) cmd_figure(opt);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
