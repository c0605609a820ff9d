// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

// qrws: command-line front end for the walk-search simulator.
//
//   qrws simulate --m 6 --marked 2 --law const --phi pi
//   qrws sweep --m 4-10 --law linear --out results
//   qrws robustness --m 6 --omega 0.9
//   qrws report --out results
//
// Settings come from --config (JSON) with flags merged over it.

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "qrws/errors.hpp"
#include "qrws/experiment.hpp"

namespace {

using Json = nlohmann::json;

struct Flags {
    std::string config;
    std::string m;
    std::vector<std::string> laws;
    std::string alpha_table;
    long long marked = 0;
    std::vector<std::string> levels;
    double step = 0.0;
    double omega = 0.0;
    std::string mode;
    std::string variant;
    int iterations = 0;
    std::string phi;
    std::string zeta;
    std::vector<std::string> window;
    double heatmap_step = 0.0;
    std::string tag;
    std::vector<std::string> inputs;
    std::string out;
    int jobs = 0;
    bool plot = false;
};

struct Bound {
    CLI::App *sub = nullptr;
    std::map<std::string, CLI::Option *> opts;
};

const char *help_for(const std::string &command) {
    if (command == "simulate") return "Run one walk and write its distribution, trace and summary";
    if (command == "sweep") return "Sweep phi over (0, 2pi) and write P_W, P_F, P_S per grid point";
    if (command == "heatmap") return "P_W over a (phi, zeta) grid";
    if (command == "robustness") return "Robustness epsilon per sweep and neighbor level";
    if (command == "fit") return "Hill fit of each sweep curve";
    if (command == "secondary-fit") return "Fit Hill parameters across coin sizes";
    if (command == "extrapolate") return "Prognosis curve and epsilon_tilde at new coin sizes";
    if (command == "lambda") return "lambda curves and Lambda averages";
    return "Compare artifacts against the embedded reference values";
}

Bound add_command(CLI::App &app, const std::string &command, Flags &f) {
    Bound b;
    b.sub = app.add_subcommand(command, help_for(command));
    auto add = [&](const std::string &name, CLI::Option *opt) { b.opts[name] = opt; };
    add("config", b.sub->add_option("--config", f.config, "JSON config file; flags override its keys"));
    add("m", b.sub->add_option("--m", f.m, "Coin size or range, e.g. 6 or 4-10"));
    add("law", b.sub->add_option("--law", f.laws, "const, linear, nl-fixed, nl-ml (repeatable or comma list)"));
    add("alpha_table", b.sub->add_option("--alpha-table", f.alpha_table, "JSON map {m: alpha} for nl-ml"));
    add("marked", b.sub->add_option("--marked", f.marked, "Marked node (default 2)"));
    add("levels", b.sub->add_option("--level", f.levels, "W/F/S or none/first/second (repeatable)"));
    add("step", b.sub->add_option("--step", f.step, "phi grid step in radians (default 0.005)"));
    add("omega", b.sub->add_option("--omega", f.omega, "Robustness threshold (default 0.9)"));
    add("mode", b.sub->add_option("--mode", f.mode, "standard or alternating"));
    add("variant", b.sub->add_option("--variant", f.variant, "Alternating even step: with_shift or literal"));
    add("iterations", b.sub->add_option("--iterations", f.iterations, "Iteration count (default: optimal k)"));
    add("phi", b.sub->add_option("--phi", f.phi, "Householder phase, e.g. pi or 2pi/3"));
    add("zeta", b.sub->add_option("--zeta", f.zeta, "Multiplier phase; default follows the law"));
    add("window", b.sub->add_option("--window", f.window, "Fit window LO HI")->expected(2));
    add("heatmap_step", b.sub->add_option("--heatmap-step", f.heatmap_step, "Heatmap grid step (default 0.05)"));
    add("tag", b.sub->add_option("--tag", f.tag, "File prefix for simulate outputs"));
    add("inputs", b.sub->add_option("--input", f.inputs, "Sweep CSV inputs instead of the output directory"));
    add("out", b.sub->add_option("--out", f.out, "Output directory (default results)"));
    add("jobs", b.sub->add_option("--jobs", f.jobs, "Worker threads; 0 uses all cores"));
    add("plot", b.sub->add_flag("--plot", f.plot, "Also write SVG plots"));
    return b;
}

Json overlay(const Bound &b, const Flags &f) {
    Json j = Json::object();
    if (!f.config.empty()) {
        std::ifstream in(f.config);
        if (!in) throw qrws::MissingArtifact(fmt::format("cannot open config file '{}'", f.config));
        try {
            j = Json::parse(in);
        } catch (const Json::exception &e) {
            throw qrws::ConfigError(fmt::format("{}: invalid JSON: {}", f.config, e.what()));
        }
        if (!j.is_object()) throw qrws::ConfigError(fmt::format("{}: config must be a JSON object", f.config));
    }
    auto given = [&](const char *name) { return b.opts.at(name)->count() > 0; };
    if (given("m")) {
        static const std::regex integer(R"(^\s*\d+\s*$)");
        if (std::regex_match(f.m, integer)) {
            j["m"] = std::stoi(f.m);
        } else {
            j["m"] = f.m;
        }
    }
    if (given("law")) j["law"] = f.laws;
    if (given("alpha_table")) j["alpha_table"] = f.alpha_table;
    if (given("marked")) j["marked"] = f.marked;
    if (given("levels")) j["levels"] = f.levels;
    if (given("step")) j["step"] = f.step;
    if (given("omega")) j["omega"] = f.omega;
    if (given("mode")) j["mode"] = f.mode;
    if (given("variant")) j["variant"] = f.variant;
    if (given("iterations")) j["iterations"] = f.iterations;
    if (given("phi")) j["phi"] = f.phi;
    if (given("zeta")) j["zeta"] = f.zeta;
    if (given("window")) j["window"] = f.window;
    if (given("heatmap_step")) j["heatmap_step"] = f.heatmap_step;
    if (given("tag")) j["tag"] = f.tag;
    if (given("inputs")) j["inputs"] = f.inputs;
    if (given("out")) j["out"] = f.out;
    if (given("jobs")) j["jobs"] = f.jobs;
    if (given("plot")) j["plot"] = f.plot;
    return j;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum random walk search on the hypercube: simulation, sweeps, fits and reports"};
    app.require_subcommand(1);
    Flags flags;
    std::vector<std::pair<std::string, Bound>> commands;
    for (const auto &name : qrws::kCommands) commands.emplace_back(name, add_command(app, name, flags));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    for (const auto &[name, bound] : commands) {
        if (!bound.sub->parsed()) continue;
        try {
            const qrws::ExperimentConfig config = qrws::ExperimentConfig::from_json(overlay(bound, flags));
            const qrws::CommandResult result = qrws::run_command(name, config, std::cerr);
            for (const auto &line : result.summary) std::cout << line << '\n';
            for (const auto &p : result.written) std::cerr << "wrote " << p.string() << '\n';
            return result.exit_code;
        } catch (const std::exception &e) {
            std::cerr << "qrws " << name << ": error: " << e.what() << '\n';
            return qrws::exit_code_for(e);
        }
    }
    return 1;
}
