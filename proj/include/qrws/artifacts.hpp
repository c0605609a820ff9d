// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qrws/hill.hpp"
#include "qrws/robustness.hpp"

namespace qrws {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// FNV-1a 64 of the compact JSON dump, as 16 hex digits. nlohmann::json
/// objects keep keys sorted, so equal configs hash equally.
std::string config_hash(const Json &config);

/// Numeric CSV with `# key: value` metadata lines ahead of the header row.
struct CsvTable {
    std::map<std::string, std::string> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::vector<double> column(std::string_view name) const;
};

/// 17 significant digits, '\n' line endings.
void write_csv(const std::filesystem::path &path, const CsvTable &table);
std::string format_csv(const CsvTable &table);

/// Parses and checks the header and schema_version. Failures name the file
/// and line. Throws MissingArtifact if the file does not exist.
CsvTable read_csv(const std::filesystem::path &path, std::span<const std::string> expected_columns,
                  std::string_view expected_kind);
CsvTable parse_csv(std::string_view text, std::span<const std::string> expected_columns,
                   std::string_view expected_kind, std::string_view source);

void write_json(const std::filesystem::path &path, const Json &doc);
/// Throws MissingArtifact / SchemaError (including a schema_version check).
Json read_json(const std::filesystem::path &path);

// Column layouts.
extern const std::vector<std::string> kSweepColumns;         // phi,zeta,p_w,p_f,p_s
extern const std::vector<std::string> kHeatmapColumns;       // phi,zeta,p_w
extern const std::vector<std::string> kDistributionColumns;  // node,probability
extern const std::vector<std::string> kTraceColumns;         // iteration,p_marked
extern const std::vector<std::string> kLambdaColumns;        // phi,lambda1,lambda2
extern const std::vector<std::string> kPrognosisColumns;     // phi,p

CsvTable sweep_table(const PhiSweep &sweep, const std::string &hash);
PhiSweep sweep_from_table(const CsvTable &table);
PhiSweep read_sweep_csv(const std::filesystem::path &path);

CsvTable heatmap_table(const Heatmap &heatmap, const std::string &hash);

Json fit_to_json(const HillFit &fit, std::string_view law, NeighborLevel level, int m, const std::string &hash);
CoinSizeFit fit_from_json(const Json &doc);

/// One object per parameter under "params".
Json secondary_to_json(const SecondaryFit &fit, const std::string &hash);
SecondaryFit secondary_from_json(const Json &doc);

Json robustness_to_json(const RobustnessReport &r, int m, std::string_view law, NeighborLevel level);

}  // namespace qrws
