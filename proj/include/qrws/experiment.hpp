// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qrws/hill.hpp"
#include "qrws/robustness.hpp"
#include "qrws/walk.hpp"

namespace qrws {

/// Resolved experiment settings shared by every subcommand. Built from a JSON
/// object (a config file with command-line flags merged over it) and validated
/// before anything runs.
struct ExperimentConfig {
    int m_lo = 6;
    int m_hi = 6;
    /// Empty selects the command's default law set.
    std::vector<std::string> laws;
    std::optional<std::string> alpha_table_path;
    std::map<int, double> alpha_table;
    Node marked = 2;
    std::vector<NeighborLevel> levels{NeighborLevel::W, NeighborLevel::F, NeighborLevel::S};
    double step = kDefaultPhiStep;
    double omega = kDefaultOmega;
    RunMode mode = RunMode::Standard;
    AlternatingVariant variant = AlternatingVariant::WithShift;
    std::optional<int> iterations;
    double phi = kPi;
    /// Overrides the law's zeta in `simulate`.
    std::optional<double> zeta;
    std::optional<FitWindow> window;
    double heatmap_step = 0.05;
    std::string tag;
    std::vector<std::filesystem::path> inputs;
    std::filesystem::path out = "results";
    unsigned jobs = 0;
    bool plot = false;

    /// Throws ConfigError naming the offending key; unknown keys are errors.
    /// A missing alpha table file throws MissingArtifact. alpha_table may
    /// also be given inline as {"6": alpha, ...}.
    static ExperimentConfig from_json(const nlohmann::json &j);
    /// Canonical form of everything that affects results (no out/jobs/plot).
    nlohmann::json to_json() const;

    std::vector<int> sizes() const;
};

/// Largest m a config may name. Commands that simulate stop at kMaxCoinSize;
/// extrapolation has no such limit.
inline constexpr int kMaxConfigCoinSize = 48;

/// Keys accepted in config files.
extern const std::vector<std::string> kConfigKeys;

/// "pi", "-pi", "2pi/3", "2*pi/3", "pi/2" or a plain number.
double parse_angle(std::string_view text);

/// "6" or "4-10".
std::pair<int, int> parse_m_range(std::string_view text);

struct CommandResult {
    std::vector<std::filesystem::path> written;
    /// Human-readable lines for stdout.
    std::vector<std::string> summary;
    int exit_code = 0;
};

extern const std::vector<std::string> kCommands;

/// Runs one subcommand. Progress goes to `log`. Failures throw qrws::Error.
CommandResult run_command(std::string_view command, const ExperimentConfig &config, std::ostream &log);

/// 0 success, 1 validation, 2 numerical failure, 3 missing artifact.
int exit_code_for(const std::exception &e) noexcept;

// Artifact names inside the output directory.
std::string sweep_file(int m, std::string_view law);
std::string fit_file(int m, std::string_view law, NeighborLevel level);
std::string secondary_file(std::string_view law, NeighborLevel level);
std::string lambda_file(int m, std::string_view law);

}  // namespace qrws
