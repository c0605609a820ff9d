// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qrws/artifacts.hpp"
#include "qrws/errors.hpp"
#include "qrws/experiment.hpp"

using namespace qrws;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string &name) {
    const fs::path dir = fs::temp_directory_path() / "qrws_experiment_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

ExperimentConfig config(Json j, const fs::path &out) {
    j["out"] = out.string();
    return ExperimentConfig::from_json(j);
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Parse, Angles) {
    EXPECT_DOUBLE_EQ(parse_angle("pi"), kPi);
    EXPECT_DOUBLE_EQ(parse_angle("-pi"), -kPi);
    EXPECT_DOUBLE_EQ(parse_angle("2pi/3"), 2 * kPi / 3);
    EXPECT_DOUBLE_EQ(parse_angle("2*pi/3"), 2 * kPi / 3);
    EXPECT_DOUBLE_EQ(parse_angle("pi/2"), kPi / 2);
    EXPECT_DOUBLE_EQ(parse_angle("1.25"), 1.25);
    EXPECT_THROW(parse_angle("tau"), ConfigError);
}

TEST(Parse, CoinSizeRange) {
    EXPECT_EQ(parse_m_range("6"), std::make_pair(6, 6));
    EXPECT_EQ(parse_m_range("4-10"), std::make_pair(4, 10));
    EXPECT_THROW(parse_m_range("4..10"), ConfigError);
}

TEST(Config, DefaultsAndValidation) {
    const auto c = ExperimentConfig::from_json(Json::object());
    EXPECT_EQ(c.m_lo, 6);
    EXPECT_EQ(c.marked, 2u);
    EXPECT_EQ(c.levels.size(), 3u);
    EXPECT_THROW(ExperimentConfig::from_json(Json::parse(R"({"colour": 1})")), ConfigError);
    EXPECT_THROW(ExperimentConfig::from_json(Json::parse(R"({"m": 1})")), InvalidDimension);
    EXPECT_THROW(ExperimentConfig::from_json(Json::parse(R"({"m": "9-4"})")), InvalidDimension);
    EXPECT_THROW(ExperimentConfig::from_json(Json::parse(R"({"omega": 1.5})")), ConfigError);
    EXPECT_THROW(ExperimentConfig::from_json(Json::parse(R"({"law": "quadratic"})")), ConfigError);
    EXPECT_THROW(ExperimentConfig::from_json(Json::parse(R"({"alpha_table": "/nonexistent/alpha.json"})")),
                 MissingArtifact);
    const auto r = ExperimentConfig::from_json(Json::parse(R"({"m": [4, 8], "law": "const,linear", "levels": ["none", "S"]})"));
    EXPECT_EQ(r.sizes(), (std::vector<int>{4, 5, 6, 7, 8}));
    EXPECT_EQ(r.laws, (std::vector<std::string>{"const", "linear"}));
    EXPECT_EQ(r.levels, (std::vector<NeighborLevel>{NeighborLevel::W, NeighborLevel::S}));
}

TEST(Config, CanonicalFormIgnoresPlumbing) {
    auto a = ExperimentConfig::from_json(Json::parse(R"({"m": 6, "out": "a", "jobs": 2})"));
    auto b = ExperimentConfig::from_json(Json::parse(R"({"m": 6, "out": "b", "plot": true})"));
    EXPECT_EQ(a.to_json(), b.to_json());
    EXPECT_EQ(ExperimentConfig::from_json(a.to_json()).to_json(), a.to_json());
}

TEST(Commands, SimulateWritesArtifactsDeterministically) {
    const fs::path dir = fresh_dir("simulate");
    std::ostringstream log;
    const auto cfg = config(Json::parse(R"({"m": 6})"), dir);
    const auto first = run_command("simulate", cfg, log);
    EXPECT_EQ(first.exit_code, 0);
    ASSERT_TRUE(fs::exists(dir / "sim_m6_standard_summary.json"));
    const Json summary = read_json(dir / "sim_m6_standard_summary.json");
    EXPECT_EQ(summary["k"], 9);
    EXPECT_EQ(summary["oracle_calls"], 18);
    EXPECT_NEAR(summary["aggregate"]["p_w"].get<double>(), 0.411765, 1e-4);
    const auto dist = read_csv(dir / "sim_m6_standard_distribution.csv", kDistributionColumns, "distribution");
    EXPECT_EQ(dist.rows.size(), 64u);

    std::map<fs::path, std::string> before;
    for (const auto &p : first.written) before[p] = slurp(p);
    const auto second = run_command("simulate", cfg, log);
    for (const auto &p : second.written) EXPECT_EQ(slurp(p), before.at(p)) << p;
}

TEST(Commands, SimulateRejectsOutOfRangeMarked) {
    const fs::path dir = fresh_dir("marked");
    std::ostringstream log;
    EXPECT_THROW(run_command("simulate", config(Json::parse(R"({"m": 3, "marked": 8})"), dir), log), Error);
    EXPECT_TRUE(fs::is_empty(dir));
}

TEST(Commands, NlMlWithoutAlphaFailsFast) {
    const fs::path dir = fresh_dir("nlml");
    std::ostringstream log;
    try {
        run_command("sweep", config(Json::parse(R"({"m": 6, "law": "nl-ml"})"), dir), log);
        FAIL();
    } catch (const ConfigError &e) {
        EXPECT_EQ(exit_code_for(e), 1);
    }
}

TEST(Commands, FitWithoutSweepIsMissingArtifact) {
    const fs::path dir = fresh_dir("fit");
    std::ostringstream log;
    try {
        run_command("fit", config(Json::parse(R"({"m": 7, "law": "const"})"), dir), log);
        FAIL();
    } catch (const MissingArtifact &e) {
        EXPECT_EQ(exit_code_for(e), 3);
        EXPECT_NE(std::string(e.what()).find("qrws sweep"), std::string::npos) << e.what();
    }
}

TEST(Commands, PartialReport) {
    const fs::path dir = fresh_dir("report");
    std::ostringstream log;
    run_command("simulate", config(Json::parse(R"({"m": 6})"), dir), log);
    const auto r = run_command("report", config(Json::object(), dir), log);
    EXPECT_EQ(r.exit_code, 3);
    const Json doc = read_json(dir / "report.json");
    bool table1_pass = false, nlml_skipped = false;
    for (const auto &row : doc["rows"]) {
        if (row["section"] == "Table 1" && row["name"] == "p_w") table1_pass = row["status"] == "pass";
        if (row["section"] == "Table 3" && row["status"] == "skipped") nlml_skipped = true;
    }
    EXPECT_TRUE(table1_pass);
    EXPECT_TRUE(nlml_skipped);
    EXPECT_FALSE(doc["missing"].empty());
    EXPECT_TRUE(fs::exists(dir / "report.md"));
}

TEST(Commands, CorruptedSweepNamesTheRow) {
    const fs::path dir = fresh_dir("corrupt");
    std::ostringstream log;
    run_command("sweep", config(Json::parse(R"({"m": 4, "law": "const", "step": 0.25})"), dir), log);
    const fs::path sweep = dir / sweep_file(4, "const");
    std::string text = slurp(sweep);
    const auto header = text.find("phi,zeta,p_w,p_f,p_s\n");
    ASSERT_NE(header, std::string::npos);
    const auto row3 = [&] {
        std::size_t pos = header;
        for (int i = 0; i < 3; ++i) pos = text.find('\n', pos) + 1;
        return pos;
    }();
    text.insert(row3, "x");
    std::ofstream(sweep, std::ios::binary) << text;

    const auto r = run_command("report", config(Json::object(), dir), log);
    EXPECT_EQ(r.exit_code, 1);
    const Json doc = read_json(dir / "report.json");
    ASSERT_FALSE(doc["schema_failures"].empty());
    EXPECT_NE(doc["schema_failures"][0].get<std::string>().find("data row 3"), std::string::npos)
        << doc["schema_failures"][0];
}

TEST(Commands, LargeCoinOnlyForExtrapolation) {
    const fs::path dir = fresh_dir("large");
    std::ostringstream log;
    const auto cfg = config(Json::parse(R"({"m": 25})"), dir);
    EXPECT_THROW(run_command("simulate", cfg, log), InvalidDimension);
    EXPECT_THROW(run_command("sweep", cfg, log), InvalidDimension);
    EXPECT_THROW(ExperimentConfig::from_json(Json::parse(R"({"m": 49})")), InvalidDimension);
}

TEST(Commands, UnknownCommand) {
    std::ostringstream log;
    EXPECT_THROW(run_command("dance", ExperimentConfig{}, log), ConfigError);
}
