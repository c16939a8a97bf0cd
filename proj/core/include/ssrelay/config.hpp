#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "ssrelay/model.hpp"

namespace ssrelay {

/// Everything a run needs: the scenario plus the estimator settings.
///
/// JSON form is a flat object with keys
///   K, epsilon, eta, sigma2, W_dB, snr_dB, p, zero_atom_mode,
///   trials, seed, gamma_th_dB
/// All keys are optional (defaults below); unknown keys are rejected.
struct RunConfig {
    SystemConfig system;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    double gamma_th_db = 0.0;

    double gamma_th() const;
    double snr_db() const;
};

/// Parse a JSON document. Throws ConfigError on syntax errors, wrong value
/// types, unknown keys or invariant violations.
RunConfig parse_run_config(std::string_view json_text);
RunConfig load_run_config(const std::filesystem::path& path);

std::string to_json(const RunConfig& config);

}  // namespace ssrelay
