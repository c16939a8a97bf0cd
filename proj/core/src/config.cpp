#include "ssrelay/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ssrelay/errors.hpp"

namespace ssrelay {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 11> kKeys = {
    "K",      "epsilon", "eta",    "sigma2", "W_dB",       "snr_dB",
    "p",      "zero_atom_mode",    "trials", "seed",       "gamma_th_dB",
};

double number_field(const json& doc, const char* key, double fallback) {
    if (!doc.contains(key)) return fallback;
    const auto& v = doc.at(key);
    if (!v.is_number()) throw ConfigError(std::string(key) + " must be a number");
    return v.get<double>();
}

std::uint64_t count_field(const json& doc, const char* key, std::uint64_t fallback) {
    if (!doc.contains(key)) return fallback;
    const auto& v = doc.at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    throw ConfigError(std::string(key) + " must be a non-negative integer");
}

}  // namespace

double RunConfig::gamma_th() const { return db_to_linear(gamma_th_db); }

double RunConfig::snr_db() const { return linear_to_db(system.snr_scale); }

RunConfig parse_run_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
            throw ConfigError("unknown config key \"" + key + "\"");
        }
    }

    RunConfig cfg;
    auto& sys = cfg.system;
    if (doc.contains("K")) {
        const auto& v = doc.at("K");
        if (!v.is_number_integer()) throw ConfigError("K must be an integer");
        sys.hop_count = v.get<int>();
    }
    sys.path_loss_exponent = number_field(doc, "epsilon", sys.path_loss_exponent);
    sys.path_loss_ratio = number_field(doc, "eta", sys.path_loss_ratio);
    sys.noise_variance = number_field(doc, "sigma2", sys.noise_variance);
    sys.interference_cap_db = number_field(doc, "W_dB", sys.interference_cap_db);
    sys.snr_scale = db_to_linear(number_field(doc, "snr_dB", 0.0));
    sys.constellation_const = number_field(doc, "p", sys.constellation_const);
    if (doc.contains("zero_atom_mode")) {
        const auto& v = doc.at("zero_atom_mode");
        if (!v.is_string()) throw ConfigError("zero_atom_mode must be a string");
        sys.zero_atom_mode = parse_zero_atom_mode(v.get<std::string>());
    }
    cfg.trials = count_field(doc, "trials", cfg.trials);
    cfg.seed = count_field(doc, "seed", cfg.seed);
    cfg.gamma_th_db = number_field(doc, "gamma_th_dB", cfg.gamma_th_db);

    sys.validate();
    if (cfg.trials == 0) throw ConfigError("trials must be >= 1");
    if (!std::isfinite(cfg.gamma_th_db)) throw ConfigError("gamma_th_dB must be finite");
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str());
}

std::string to_json(const RunConfig& config) {
    const auto& sys = config.system;
    json doc = {
        {"K", sys.hop_count},
        {"epsilon", sys.path_loss_exponent},
        {"eta", sys.path_loss_ratio},
        {"sigma2", sys.noise_variance},
        {"W_dB", sys.interference_cap_db},
        {"snr_dB", config.snr_db()},
        {"p", sys.constellation_const},
        {"zero_atom_mode", std::string(to_string(sys.zero_atom_mode))},
        {"trials", config.trials},
        {"seed", config.seed},
        {"gamma_th_dB", config.gamma_th_db},
    };
    return doc.dump(2);
}

}  // namespace ssrelay
