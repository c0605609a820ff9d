// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrws/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "qrws/artifacts.hpp"
#include "qrws/errors.hpp"
#include "qrws/neighborhood.hpp"
#include "qrws/reference.hpp"
#include "qrws/svg.hpp"

namespace qrws {

namespace fs = std::filesystem;

const std::vector<std::string> kConfigKeys{
    "m",     "law",        "alpha_table", "marked",       "levels", "step",   "omega", "mode",  "variant",
    "iterations", "phi",   "zeta",        "window",       "heatmap_step", "tag", "inputs", "out", "jobs", "plot"};

const std::vector<std::string> kCommands{"simulate", "sweep",      "heatmap", "robustness", "fit",
                                         "secondary-fit", "extrapolate", "lambda", "report"};

double parse_angle(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    static const std::regex pi_form(R"(^([+-]?(?:\d+\.?\d*|\.\d+)?)\*?pi(?:/((?:\d+\.?\d*|\.\d+)))?$)");
    std::smatch match;
    if (std::regex_match(s, match, pi_form)) {
        const std::string coef = match[1].str();
        double c = 1.0;
        if (coef == "-") {
            c = -1.0;
        } else if (!coef.empty() && coef != "+") {
            c = std::stod(coef);
        }
        const double d = match[2].matched ? std::stod(match[2].str()) : 1.0;
        if (d == 0.0) throw ConfigError(fmt::format("angle '{}' divides by zero", text));
        return c * kPi / d;
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size() && std::isfinite(v)) return v;
    } catch (const std::exception &) {
    }
    throw ConfigError(fmt::format("cannot parse angle '{}' (use a number or forms like pi, 2pi/3)", text));
}

std::pair<int, int> parse_m_range(std::string_view text) {
    static const std::regex range(R"(^\s*(\d+)\s*(?:-\s*(\d+))?\s*$)");
    const std::string s(text);
    std::smatch match;
    if (!std::regex_match(s, match, range)) {
        throw ConfigError(fmt::format("m must be an integer or a range like 4-10, got '{}'", text));
    }
    const int lo = std::stoi(match[1].str());
    const int hi = match[2].matched ? std::stoi(match[2].str()) : lo;
    return {lo, hi};
}

namespace {

using Json = nlohmann::json;

double angle_value(const Json &v, const char *key) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_angle(v.get<std::string>());
    throw ConfigError(fmt::format("'{}' must be a number or an angle string", key));
}

std::vector<std::string> string_list(const Json &v, const char *key) {
    std::vector<std::string> out;
    auto push = [&](const std::string &s) {
        std::size_t start = 0;
        for (;;) {
            const std::size_t comma = s.find(',', start);
            std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!item.empty()) out.push_back(item);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    };
    if (v.is_string()) {
        push(v.get<std::string>());
    } else if (v.is_array()) {
        for (const auto &e : v) {
            if (!e.is_string()) throw ConfigError(fmt::format("'{}' entries must be strings", key));
            push(e.get<std::string>());
        }
    } else {
        throw ConfigError(fmt::format("'{}' must be a string or a list of strings", key));
    }
    return out;
}

template <class T>
T number(const Json &v, const char *key) {
    if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) throw ConfigError(fmt::format("'{}' must be an integer", key));
    } else {
        if (!v.is_number()) throw ConfigError(fmt::format("'{}' must be a number", key));
    }
    return v.get<T>();
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const Json &j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto &[key, _] : j.items()) {
        if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end()) {
            throw ConfigError(fmt::format("unknown config key '{}'", key));
        }
    }
    ExperimentConfig c;
    try {
        if (j.contains("m")) {
            const Json &v = j["m"];
            if (v.is_number_integer()) {
                c.m_lo = c.m_hi = v.get<int>();
            } else if (v.is_string()) {
                std::tie(c.m_lo, c.m_hi) = parse_m_range(v.get<std::string>());
            } else if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
                c.m_lo = v[0].get<int>();
                c.m_hi = v[1].get<int>();
            } else {
                throw ConfigError("'m' must be an integer, a range string like \"4-10\" or [lo, hi]");
            }
        }
        if (j.contains("law")) {
            for (const auto &name : string_list(j["law"], "law")) {
                c.laws.emplace_back(law_name(parse_law_kind(name)));
            }
        }
        if (j.contains("alpha_table")) {
            const Json &a = j["alpha_table"];
            if (a.is_string()) {
                c.alpha_table_path = a.get<std::string>();
            } else if (a.is_object()) {
                c.alpha_table = parse_alpha_table(a.dump());
            } else {
                throw ConfigError("'alpha_table' must be a path string or an {m: alpha} object");
            }
        }
        if (j.contains("marked")) {
            const auto v = number<long long>(j["marked"], "marked");
            if (v < 0) throw ConfigError("'marked' must be a non-negative node index");
            c.marked = static_cast<Node>(v);
        }
        if (j.contains("levels")) {
            c.levels.clear();
            for (const auto &name : string_list(j["levels"], "levels")) {
                const NeighborLevel level = parse_level(name);
                if (std::find(c.levels.begin(), c.levels.end(), level) == c.levels.end()) c.levels.push_back(level);
            }
            if (c.levels.empty()) throw ConfigError("'levels' must not be empty");
        }
        if (j.contains("step")) c.step = number<double>(j["step"], "step");
        if (j.contains("omega")) c.omega = number<double>(j["omega"], "omega");
        if (j.contains("mode")) {
            if (!j["mode"].is_string()) throw ConfigError("'mode' must be a string");
            c.mode = parse_mode(j["mode"].get<std::string>());
        }
        if (j.contains("variant")) {
            if (!j["variant"].is_string()) throw ConfigError("'variant' must be a string");
            c.variant = parse_variant(j["variant"].get<std::string>());
        }
        if (j.contains("iterations") && !j["iterations"].is_null()) {
            c.iterations = number<int>(j["iterations"], "iterations");
        }
        if (j.contains("phi")) c.phi = angle_value(j["phi"], "phi");
        if (j.contains("zeta") && !j["zeta"].is_null()) c.zeta = angle_value(j["zeta"], "zeta");
        if (j.contains("window") && !j["window"].is_null()) {
            const Json &w = j["window"];
            if (!w.is_array() || w.size() != 2) throw ConfigError("'window' must be [lo, hi]");
            c.window = FitWindow{angle_value(w[0], "window"), angle_value(w[1], "window")};
        }
        if (j.contains("heatmap_step")) c.heatmap_step = number<double>(j["heatmap_step"], "heatmap_step");
        if (j.contains("tag")) {
            if (!j["tag"].is_string()) throw ConfigError("'tag' must be a string");
            c.tag = j["tag"].get<std::string>();
        }
        if (j.contains("inputs")) {
            for (const auto &p : string_list(j["inputs"], "inputs")) c.inputs.emplace_back(p);
        }
        if (j.contains("out")) {
            if (!j["out"].is_string()) throw ConfigError("'out' must be a path string");
            c.out = j["out"].get<std::string>();
        }
        if (j.contains("jobs")) {
            const int jobs = number<int>(j["jobs"], "jobs");
            if (jobs < 0) throw ConfigError("'jobs' must be >= 0");
            c.jobs = static_cast<unsigned>(jobs);
        }
        if (j.contains("plot")) {
            if (!j["plot"].is_boolean()) throw ConfigError("'plot' must be true or false");
            c.plot = j["plot"].get<bool>();
        }
    } catch (const Json::exception &e) {
        throw ConfigError(fmt::format("invalid config: {}", e.what()));
    }

    if (c.m_lo < 2 || c.m_hi > kMaxConfigCoinSize || c.m_lo > c.m_hi) {
        throw InvalidDimension(fmt::format("coin size range {}-{} invalid: need 2 <= lo <= hi <= {}", c.m_lo, c.m_hi,
                                           kMaxConfigCoinSize));
    }
    if (!(c.step > 0.0 && c.step < kPi)) throw ConfigError(fmt::format("'step' must lie in (0, pi), got {}", c.step));
    if (!(c.omega > 0.0 && c.omega < 1.0)) {
        throw ConfigError(fmt::format("'omega' must lie in (0, 1), got {}", c.omega));
    }
    if (c.iterations && *c.iterations < 0) throw ConfigError("'iterations' must be >= 0");
    if (!(c.heatmap_step > 0.0 && c.heatmap_step < kPi)) throw ConfigError("'heatmap_step' must lie in (0, pi)");
    if (c.window && !(c.window->lo < c.window->hi)) throw ConfigError("'window' needs lo < hi");
    if (!c.tag.empty() && c.tag.find_first_of("/\\") != std::string::npos) {
        throw ConfigError("'tag' must not contain path separators");
    }
    if (c.alpha_table_path) c.alpha_table = load_alpha_table(*c.alpha_table_path);
    return c;
}

Json ExperimentConfig::to_json() const {
    Json j;
    j["m"] = {m_lo, m_hi};
    j["law"] = laws;
    Json alpha = Json::object();
    for (const auto &[m, a] : alpha_table) alpha[std::to_string(m)] = a;
    j["alpha_table"] = alpha;
    j["marked"] = marked;
    Json lv = Json::array();
    for (auto l : levels) lv.push_back(level_name(l));
    j["levels"] = lv;
    j["step"] = step;
    j["omega"] = omega;
    j["mode"] = mode_name(mode);
    j["variant"] = variant_name(variant);
    j["iterations"] = iterations ? Json(*iterations) : Json(nullptr);
    j["phi"] = phi;
    j["zeta"] = zeta ? Json(*zeta) : Json(nullptr);
    j["window"] = window ? Json{window->lo, window->hi} : Json(nullptr);
    j["heatmap_step"] = heatmap_step;
    j["tag"] = tag;
    Json in = Json::array();
    for (const auto &p : inputs) in.push_back(p.generic_string());
    j["inputs"] = in;
    return j;
}

std::vector<int> ExperimentConfig::sizes() const {
    std::vector<int> out;
    for (int m = m_lo; m <= m_hi; ++m) out.push_back(m);
    return out;
}

int exit_code_for(const std::exception &e) noexcept {
    if (const auto *err = dynamic_cast<const Error *>(&e)) {
        switch (err->kind()) {
            case ErrorKind::Validation: return 1;
            case ErrorKind::Numerical: return 2;
            case ErrorKind::MissingArtifact: return 3;
        }
    }
    return 2;
}

std::string sweep_file(int m, std::string_view law) { return fmt::format("sweep_m{}_{}.csv", m, law); }
std::string fit_file(int m, std::string_view law, NeighborLevel level) {
    return fmt::format("fit_m{}_{}_{}.json", m, law, level_name(level));
}
std::string secondary_file(std::string_view law, NeighborLevel level) {
    return fmt::format("secondary_{}_{}.json", law, level_name(level));
}
std::string lambda_file(int m, std::string_view law) { return fmt::format("lambda_m{}_{}.json", m, law); }

namespace {

const char *kLevelColors[] = {"#d62728", "#1f77b4", "#2ca02c"};
const char *kLawColors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};

std::string_view level_color(NeighborLevel l) { return kLevelColors[static_cast<int>(l)]; }
std::string_view law_color(std::string_view law) { return kLawColors[static_cast<int>(parse_law_kind(law))]; }

struct Context {
    std::string_view command;
    const ExperimentConfig &cfg;
    std::ostream &log;
    std::string hash;
    CommandResult result;

    fs::path path(const std::string &name) const { return cfg.out / name; }

    void csv(const std::string &name, const CsvTable &table) {
        write_csv(path(name), table);
        result.written.push_back(path(name));
    }
    void json(const std::string &name, const Json &doc) {
        write_json(path(name), doc);
        result.written.push_back(path(name));
    }
    void svg(const std::string &name, const std::string &text) {
        if (!cfg.plot) return;
        fs::create_directories(cfg.out);
        std::ofstream(path(name), std::ios::binary) << text;
        result.written.push_back(path(name));
    }
    CsvTable table(std::string kind, std::vector<std::string> columns) const {
        CsvTable t;
        t.meta = {{"schema_version", std::to_string(kSchemaVersion)}, {"kind", std::move(kind)}, {"config_hash", hash}};
        t.columns = std::move(columns);
        return t;
    }
    Json doc(std::string kind) const {
        return Json{{"schema_version", kSchemaVersion}, {"kind", std::move(kind)}, {"config_hash", hash}};
    }
};

std::vector<std::string> laws_or(const ExperimentConfig &cfg, std::vector<std::string> defaults) {
    if (!cfg.laws.empty()) return cfg.laws;
    if (!cfg.alpha_table.empty()) defaults.emplace_back("nl-ml");
    return defaults;
}

const std::vector<std::string> kAnalysisLaws{"const", "linear", "nl-fixed"};

DependenceLaw make_law(const ExperimentConfig &cfg, std::string_view name) {
    return DependenceLaw::parse(name, cfg.alpha_table);
}

/// Checks everything a simulation over (sizes x laws) needs, before any runs.
void check_simulable(const ExperimentConfig &cfg, const std::vector<int> &sizes, const std::vector<std::string> &laws) {
    for (int m : sizes) {
        if (m > kMaxCoinSize) {
            throw InvalidDimension(
                fmt::format("m={} is too large to simulate (limit {}); only extrapolate accepts it", m, kMaxCoinSize));
        }
        if (cfg.marked >= (Node{1} << m)) {
            throw ConfigError(fmt::format("marked node {} is outside [0, 2^{}) = [0, {})", cfg.marked, m, Node{1} << m));
        }
        for (const auto &law : laws) {
            const DependenceLaw l = make_law(cfg, law);
            if (l.kind() == LawKind::NonlinearMl && !l.has_alpha(m)) {
                throw ConfigError(fmt::format("law nl-ml needs alpha_ml for m={}; supply --alpha-table with an entry "
                                              "for it",
                                              m));
            }
        }
    }
}

std::string sweep_svg(const PhiSweep &s) {
    std::vector<PlotSeries> series;
    for (auto level : kAllLevels) {
        series.push_back({fmt::format("P_{}", level_name(level)), s.phi, s.curve(level).p, std::string(level_color(level))});
    }
    return line_plot_svg({fmt::format("Success probability, m={}, law {}", s.m, s.law), "phi", "P"}, series);
}

PhiSweep compute_sweep(Context &ctx, int m, const std::string &law) {
    ctx.log << fmt::format("sweep m={} law={} ({} grid points)\n", m, law, phi_grid(ctx.cfg.step).size());
    const auto grid = phi_grid(ctx.cfg.step);
    PhiSweep s = sweep_phi(m, make_law(ctx.cfg, law), ctx.cfg.marked, grid, ctx.cfg.jobs);
    const std::string name = sweep_file(m, law);
    ctx.csv(name, sweep_table(s, ctx.hash));
    ctx.svg(fs::path(name).replace_extension(".svg").string(), sweep_svg(s));
    return s;
}

struct SweepSource {
    PhiSweep sweep;
    fs::path path;
};

/// Sweeps named by --input, or the default file per (m, law) in the output
/// directory. With `compute_missing`, absent default files are simulated.
std::vector<SweepSource> gather_sweeps(Context &ctx, const std::vector<std::string> &laws, bool compute_missing) {
    std::vector<SweepSource> out;
    if (!ctx.cfg.inputs.empty()) {
        for (const auto &p : ctx.cfg.inputs) out.push_back({read_sweep_csv(p), p});
        return out;
    }
    const auto sizes = ctx.cfg.sizes();
    if (compute_missing) check_simulable(ctx.cfg, sizes, laws);
    for (int m : sizes) {
        for (const auto &law : laws) {
            const fs::path p = ctx.path(sweep_file(m, law));
            if (fs::exists(p)) {
                PhiSweep s = read_sweep_csv(p);
                if (s.m != m || s.law != law) {
                    throw SchemaError(fmt::format("{}: holds m={} law={}, expected m={} law={}", p.string(), s.m, s.law,
                                                  m, law));
                }
                out.push_back({std::move(s), p});
            } else if (compute_missing) {
                ctx.log << fmt::format("{} not found, computing it\n", p.string());
                out.push_back({compute_sweep(ctx, m, law), p});
            } else {
                throw MissingArtifact(fmt::format("missing sweep '{}'; run `qrws sweep --m {} --law {} --out {}` first",
                                                  p.string(), m, law, ctx.cfg.out.string()));
            }
        }
    }
    return out;
}

// ---- simulate ---------------------------------------------------------------

void cmd_simulate(Context &ctx) {
    const auto &cfg = ctx.cfg;
    if (cfg.m_lo != cfg.m_hi) throw ConfigError("simulate takes a single coin size, not a range");
    if (cfg.laws.size() > 1) throw ConfigError("simulate takes a single law");
    const int m = cfg.m_lo;
    const std::string law_s = cfg.laws.empty() ? "const" : cfg.laws.front();
    if (!cfg.zeta) check_simulable(cfg, {m}, {law_s});
    check_simulable(cfg, {m}, {});
    const DependenceLaw law = make_law(cfg, law_s);

    RunConfig run;
    run.m = m;
    run.marked = {cfg.marked};
    run.coin = {m, cfg.phi, cfg.zeta ? *cfg.zeta : zeta_of_phi(law, cfg.phi, m)};
    run.iterations = cfg.iterations;
    run.mode = cfg.mode;
    run.variant = cfg.variant;
    const SimulationResult r = qrws::run(run);
    const NeighborAggregate agg = aggregate(r.distribution, cfg.marked, m);

    const std::string tag = cfg.tag.empty() ? fmt::format("sim_m{}_{}", m, mode_name(cfg.mode)) : cfg.tag;
    CsvTable dist = ctx.table("distribution", kDistributionColumns);
    for (std::size_t j = 0; j < r.distribution.size(); ++j) dist.rows.push_back({double(j), r.distribution[j]});
    ctx.csv(tag + "_distribution.csv", dist);
    CsvTable trace = ctx.table("trace", kTraceColumns);
    for (std::size_t t = 0; t < r.trace.size(); ++t) trace.rows.push_back({double(t), r.trace[t]});
    ctx.csv(tag + "_trace.csv", trace);

    Json summary = ctx.doc("simulation");
    summary["m"] = m;
    summary["marked"] = cfg.marked;
    summary["law"] = law_s;
    summary["phi"] = run.coin.phi;
    summary["zeta"] = run.coin.zeta;
    summary["mode"] = mode_name(cfg.mode);
    summary["variant"] = variant_name(cfg.variant);
    summary["k"] = iteration_count(m);
    summary["iterations_run"] = r.iterations_run;
    summary["oracle_calls"] = r.oracle_calls;
    summary["aggregate"] = {{"p_w", agg.p_w()},
                            {"first", agg.p_first_sum},
                            {"second", agg.p_second_sum},
                            {"residue", agg.residue},
                            {"p_f", agg.p_f()},
                            {"p_s", agg.p_s()},
                            {"counts", {agg.count_marked, agg.count_first, agg.count_second, agg.count_residue}}};
    Json budget = Json::object();
    for (auto s : {MeasurementStrategy::None, MeasurementStrategy::First, MeasurementStrategy::Second}) {
        const MeasurementBudget b = measurement_budget(m, s);
        budget[std::string(strategy_name(s))] = {{"classical_measurements", b.classical_measurements},
                                                 {"total_cost_first", b.total_cost_first}};
    }
    summary["measurement_budget"] = budget;
    ctx.json(tag + "_summary.json", summary);

    std::vector<double> t_axis, p_axis;
    for (std::size_t t = 0; t < r.trace.size(); ++t) {
        t_axis.push_back(double(t));
        p_axis.push_back(r.trace[t]);
    }
    const PlotSeries trace_series{"p(marked)", t_axis, p_axis};
    ctx.svg(tag + "_trace.svg", line_plot_svg({fmt::format("Marked-node probability, m={}", m), "iteration", "p"},
                                              std::span(&trace_series, 1)));
    std::vector<double> nodes;
    for (std::size_t j = 0; j < r.distribution.size(); ++j) nodes.push_back(double(j));
    const PlotSeries dist_series{"p(j)", nodes, r.distribution};
    ctx.svg(tag + "_distribution.svg", line_plot_svg({fmt::format("Final distribution, m={}", m), "node", "p"},
                                                     std::span(&dist_series, 1)));

    ctx.result.summary.push_back(fmt::format(
        "m={} marked={} phi={:.6g} zeta={:.6g} mode={} k={} iterations_run={} oracle_calls={}", m, cfg.marked,
        run.coin.phi, run.coin.zeta, mode_name(cfg.mode), iteration_count(m), r.iterations_run, r.oracle_calls));
    ctx.result.summary.push_back(fmt::format("p_w={:.7f} first={:.7f} second={:.7f} residue={:.7f} p_f={:.7f} p_s={:.7f}",
                                             agg.p_w(), agg.p_first_sum, agg.p_second_sum, agg.residue, agg.p_f(),
                                             agg.p_s()));
}

// ---- sweep / heatmap --------------------------------------------------------

void cmd_sweep(Context &ctx) {
    const auto laws = laws_or(ctx.cfg, {"const"});
    const auto sizes = ctx.cfg.sizes();
    check_simulable(ctx.cfg, sizes, laws);
    for (int m : sizes) {
        for (const auto &law : laws) {
            const PhiSweep s = compute_sweep(ctx, m, law);
            const std::size_t mid = s.phi.size() / 2;
            ctx.result.summary.push_back(fmt::format("m={} law={} points={} P_W(pi)={:.7f} P_F(pi)={:.7f} P_S(pi)={:.7f}",
                                                     m, law, s.phi.size(), s.p_w[mid], s.p_f[mid], s.p_s[mid]));
        }
    }
}

std::vector<double> closed_grid(double step) {
    std::vector<double> g;
    const auto n = static_cast<long>(std::floor(kTwoPi / step + 1e-9));
    for (long i = 0; i <= n; ++i) g.push_back(static_cast<double>(i) * step);
    return g;
}

void cmd_heatmap(Context &ctx) {
    const auto sizes = ctx.cfg.sizes();
    check_simulable(ctx.cfg, sizes, {});
    const auto grid = closed_grid(ctx.cfg.heatmap_step);
    for (int m : sizes) {
        ctx.log << fmt::format("heatmap m={} ({} x {} points)\n", m, grid.size(), grid.size());
        const Heatmap h = sweep_heatmap(m, grid, grid, ctx.cfg.marked, ctx.cfg.jobs);
        const std::string name = fmt::format("heatmap_m{}", m);
        ctx.csv(name + ".csv", heatmap_table(h, ctx.hash));
        ctx.svg(name + ".svg",
                heatmap_svg({fmt::format("P_W over (phi, zeta), m={}", m), "phi", "zeta"}, h.phi, h.zeta, h.p_w));
        const auto best = std::max_element(h.p_w.begin(), h.p_w.end()) - h.p_w.begin();
        ctx.result.summary.push_back(fmt::format("m={} max P_W={:.6f} at phi={:.4f} zeta={:.4f}", m, h.p_w[best],
                                                 h.phi[best / h.zeta.size()], h.zeta[best % h.zeta.size()]));
    }
}

// ---- robustness -------------------------------------------------------------

void cmd_robustness(Context &ctx) {
    const auto sweeps = gather_sweeps(ctx, laws_or(ctx.cfg, kAnalysisLaws), true);
    std::map<std::pair<std::string, NeighborLevel>, std::vector<std::pair<int, double>>> by_law;
    for (const auto &src : sweeps) {
        const PhiSweep &s = src.sweep;
        Json doc = ctx.doc("robustness");
        doc["m"] = s.m;
        doc["law"] = s.law;
        doc["omega"] = ctx.cfg.omega;
        doc["source"] = src.path.filename().string();
        doc["levels"] = Json::array();
        for (auto level : ctx.cfg.levels) {
            const RobustnessReport r = robustness_epsilon(s.curve(level), ctx.cfg.omega);
            doc["levels"].push_back(robustness_to_json(r, s.m, s.law, level));
            by_law[{s.law, level}].push_back({s.m, r.epsilon});
            ctx.result.summary.push_back(fmt::format("m={} law={} level={} phi_max={:.6f} p_max={:.7f} epsilon={:.4f}{}",
                                                     s.m, s.law, level_name(level), r.phi_max, r.p_max, r.epsilon,
                                                     r.edge_bounded ? " (domain edge)" : ""));
        }
        ctx.json(fmt::format("robustness_m{}_{}.json", s.m, s.law), doc);
    }
    if (ctx.cfg.plot) {
        for (auto level : ctx.cfg.levels) {
            std::vector<PlotSeries> series;
            for (const auto &[key, points] : by_law) {
                if (key.second != level) continue;
                PlotSeries p{key.first, {}, {}, std::string(law_color(key.first))};
                for (const auto &[m, e] : points) {
                    p.x.push_back(m);
                    p.y.push_back(e);
                }
                series.push_back(std::move(p));
            }
            ctx.svg(fmt::format("robustness_{}.svg", level_name(level)),
                    line_plot_svg({fmt::format("Robustness, level {}, omega={}", level_name(level), ctx.cfg.omega),
                                   "m", "epsilon"},
                                  series));
        }
    }
}

// ---- fit --------------------------------------------------------------------

void cmd_fit(Context &ctx) {
    const auto sweeps = gather_sweeps(ctx, laws_or(ctx.cfg, kAnalysisLaws), false);
    for (const auto &src : sweeps) {
        const PhiSweep &s = src.sweep;
        const FitWindow window = ctx.cfg.window ? *ctx.cfg.window : default_window(parse_law_kind(s.law));
        for (auto level : ctx.cfg.levels) {
            const ProbabilityCurve curve = s.curve(level);
            const HillFit fit = hill_fit(curve, window);
            ctx.json(fit_file(s.m, s.law, level), fit_to_json(fit, s.law, level, s.m, ctx.hash));
            const double pmax = *std::max_element(curve.p.begin(), curve.p.end());
            ctx.result.summary.push_back(fmt::format(
                "m={} law={} level={} b={:.6f} kappa={:.6f} eta={:.6f} sigma={:.5f} (curve max {:.6f})", s.m, s.law,
                level_name(level), fit.params.b, fit.params.kappa, fit.params.eta, fit.sigma, pmax));
            if (ctx.cfg.plot) {
                std::vector<double> model;
                for (double phi : curve.phi) model.push_back(hill_eval(phi, fit.params));
                const std::vector<PlotSeries> series{{"simulated", curve.phi, curve.p, "#1f77b4"},
                                                     {"Hill fit", curve.phi, model, "#d62728", true}};
                ctx.svg(fs::path(fit_file(s.m, s.law, level)).replace_extension(".svg").string(),
                        line_plot_svg({fmt::format("Hill fit, m={}, law {}, level {}", s.m, s.law, level_name(level)),
                                       "phi", "P"},
                                      series));
            }
        }
    }
}

// ---- secondary-fit ----------------------------------------------------------

void cmd_secondary_fit(Context &ctx) {
    const auto laws = laws_or(ctx.cfg, kAnalysisLaws);
    const auto sizes = ctx.cfg.sizes();
    if (sizes.size() < kMinSecondarySizes) {
        throw ConfigError(fmt::format("secondary-fit needs at least {} coin sizes; pass e.g. --m 4-10",
                                      kMinSecondarySizes));
    }
    for (const auto &law : laws) {
        for (auto level : ctx.cfg.levels) {
            std::vector<CoinSizeFit> fits;
            for (int m : sizes) {
                const fs::path p = ctx.path(fit_file(m, law, level));
                if (!fs::exists(p)) {
                    throw MissingArtifact(fmt::format("missing fit '{}'; run `qrws fit --m {}-{} --law {}` first",
                                                      p.string(), sizes.front(), sizes.back(), law));
                }
                fits.push_back(fit_from_json(read_json(p)));
            }
            const SecondaryFit sec = secondary_fit(fits, law, level);
            ctx.json(secondary_file(law, level), secondary_to_json(sec, ctx.hash));
            ctx.result.summary.push_back(fmt::format(
                "law={} level={} b: c1={:.6g} c2={:.6g} | kappa: c1={:.6g} c2={:.6g}{} c3={:.6g} c4={:.6g} | "
                "eta: c1={:.6g} c2={:.6g} c3={:.6g}",
                law, level_name(level), sec.b.c[0], sec.b.c[1], sec.kappa.c[0], sec.kappa.c[1],
                sec.kappa.frozen[1] ? " (frozen)" : "", sec.kappa.c[2], sec.kappa.c[3], sec.eta.c[0], sec.eta.c[1],
                sec.eta.c[2]));
            if (ctx.cfg.plot) {
                for (const SecondaryCurve *curve : {&sec.b, &sec.kappa, &sec.eta}) {
                    PlotSeries data{"fitted per m", {}, {}, "#1f77b4"};
                    PlotSeries model{"secondary fit", {}, {}, "#d62728", true};
                    for (const auto &f : fits) {
                        data.x.push_back(f.m);
                        data.y.push_back(curve->param == SecondaryParam::B       ? f.fit.params.b
                                         : curve->param == SecondaryParam::Kappa ? f.fit.params.kappa
                                                                                 : f.fit.params.eta);
                    }
                    for (int m = sizes.front(); m <= 25; ++m) {
                        model.x.push_back(m);
                        model.y.push_back((*curve)(m));
                    }
                    const std::vector<PlotSeries> series{data, model};
                    const std::string pname(secondary_param_name(curve->param));
                    ctx.svg(fmt::format("secondary_{}_{}_{}.svg", law, level_name(level), pname),
                            line_plot_svg({fmt::format("{}(m), law {}, level {}", pname, law, level_name(level)), "m",
                                           pname},
                                          series));
                }
            }
        }
    }
}

// ---- extrapolate ------------------------------------------------------------

void cmd_extrapolate(Context &ctx) {
    const auto laws = laws_or(ctx.cfg, kAnalysisLaws);
    const auto grid = phi_grid(ctx.cfg.step);
    for (const auto &law : laws) {
        for (auto level : ctx.cfg.levels) {
            const fs::path p = ctx.path(secondary_file(law, level));
            if (!fs::exists(p)) {
                throw MissingArtifact(fmt::format("missing secondary fit '{}'; run `qrws secondary-fit --m 4-10 --law {}` "
                                                  "first",
                                                  p.string(), law));
            }
            const SecondaryFit sec = secondary_from_json(read_json(p));
            std::vector<PlotSeries> series;
            for (int m : ctx.cfg.sizes()) {
                HillParams hp;
                try {
                    hp = extrapolate(sec, m);
                } catch (const ExtrapolationError &e) {
                    // Other (law, level) pairs may still be valid here.
                    ctx.result.summary.push_back(fmt::format("m={} law={} level={} invalid: {}", m, law,
                                                             level_name(level), e.what()));
                    ctx.result.exit_code = 2;
                    continue;
                }
                const double b = std::min(hp.b, 1.0);
                if (hp.b > 1.0) {
                    ctx.log << fmt::format("m={} law={} level={}: extrapolated b={:.6f} > 1, clamped to 1 for the "
                                           "prognosis curve\n",
                                           m, law, level_name(level), hp.b);
                }
                const double eps = epsilon_tilde(hp.kappa, hp.eta, ctx.cfg.omega);
                const std::string stem = fmt::format("m{}_{}_{}", m, law, level_name(level));
                Json doc = ctx.doc("extrapolation");
                doc["m"] = m;
                doc["law"] = law;
                doc["level"] = level_name(level);
                doc["b"] = hp.b;
                doc["b_clamped"] = b;
                doc["kappa"] = hp.kappa;
                doc["eta"] = hp.eta;
                doc["omega"] = ctx.cfg.omega;
                doc["epsilon_tilde"] = eps;
                doc["source_m_range"] = {sec.m_lo, sec.m_hi};
                ctx.json("extrapolate_" + stem + ".json", doc);
                CsvTable t = ctx.table("prognosis", kPrognosisColumns);
                t.meta["m"] = std::to_string(m);
                t.meta["law"] = law;
                t.meta["level"] = level_name(level);
                PlotSeries s{fmt::format("m={}", m), {}, {}, kLawColors[series.size() % 4], true};
                for (double phi : grid) {
                    const double v = hill_eval(phi, b, hp.kappa, hp.eta);
                    t.rows.push_back({phi, v});
                    s.x.push_back(phi);
                    s.y.push_back(v);
                }
                ctx.csv("prognosis_" + stem + ".csv", t);
                series.push_back(std::move(s));
                ctx.result.summary.push_back(fmt::format("m={} law={} level={} b={:.6f} kappa={:.6f} eta={:.6f} "
                                                         "epsilon_tilde={:.5f}",
                                                         m, law, level_name(level), hp.b, hp.kappa, hp.eta, eps));
            }
            if (series.empty()) continue;
            ctx.svg(fmt::format("prognosis_{}_{}.svg", law, level_name(level)),
                    line_plot_svg({fmt::format("Prognosis, law {}, level {}", law, level_name(level)), "phi", "P"},
                                  series));
        }
    }
}

// ---- lambda -----------------------------------------------------------------

void cmd_lambda(Context &ctx) {
    const auto sweeps = gather_sweeps(ctx, laws_or(ctx.cfg, {"linear", "nl-fixed"}), true);
    for (const auto &src : sweeps) {
        const PhiSweep &s = src.sweep;
        const LambdaReport r = lambda_report(s, ctx.cfg.omega);
        Json doc = ctx.doc("lambda");
        doc["m"] = s.m;
        doc["law"] = s.law;
        doc["omega"] = ctx.cfg.omega;
        doc["epsilon_w"] = r.epsilon_w;
        doc["interval"] = {r.interval_lo, r.interval_hi};
        doc["Lambda1"] = r.capital_lambda1;
        doc["Lambda2"] = r.capital_lambda2;
        doc["source"] = src.path.filename().string();
        ctx.json(lambda_file(s.m, s.law), doc);
        CsvTable t = ctx.table("lambda", kLambdaColumns);
        t.meta["m"] = std::to_string(s.m);
        t.meta["law"] = s.law;
        for (std::size_t i = 0; i < r.curves.phi.size(); ++i) {
            t.rows.push_back({r.curves.phi[i], r.curves.lambda1[i], r.curves.lambda2[i]});
        }
        const std::string stem = fmt::format("lambda_m{}_{}", s.m, s.law);
        ctx.csv(stem + ".csv", t);
        const std::vector<PlotSeries> series{{"lambda1", r.curves.phi, r.curves.lambda1, "#1f77b4"},
                                             {"lambda2", r.curves.phi, r.curves.lambda2, "#2ca02c"}};
        ctx.svg(stem + ".svg", line_plot_svg({fmt::format("lambda curves, m={}, law {}", s.m, s.law), "phi", "lambda"},
                                             series));
        ctx.result.summary.push_back(fmt::format("m={} law={} epsilon_W={:.4f} Lambda1={:.7f} Lambda2={:.7f}", s.m,
                                                 s.law, r.epsilon_w, r.capital_lambda1, r.capital_lambda2));
    }
}

// ---- report -----------------------------------------------------------------

struct Row {
    std::string section;
    std::string name;
    std::optional<double> computed;
    std::optional<double> reference;
    std::optional<double> tolerance;
    std::string status;  // pass, fail, missing, skipped, error
    std::string note;
};

struct ReportBuilder {
    Context &ctx;
    std::vector<Row> rows;
    std::set<std::string> missing;
    std::vector<std::string> schema_failures;

    fs::path path(const std::string &name) const { return ctx.path(name); }

    void check(std::string section, std::string name, double computed, double reference, double tol,
               std::string note = {}) {
        const bool ok = std::abs(computed - reference) <= tol;
        rows.push_back({std::move(section), std::move(name), computed, reference, tol, ok ? "pass" : "fail",
                        std::move(note)});
    }
    void absent(std::string section, std::string name, const std::string &file) {
        missing.insert(file);
        rows.push_back({std::move(section), std::move(name), {}, {}, {}, "missing", file});
    }
    void error(std::string section, std::string name, const std::string &what) {
        rows.push_back({std::move(section), std::move(name), {}, {}, {}, "error", what});
    }

    std::optional<Json> load(const std::string &section, const std::string &name, const std::string &file) {
        if (!fs::exists(path(file))) {
            absent(section, name, file);
            return std::nullopt;
        }
        try {
            return read_json(path(file));
        } catch (const Error &e) {
            schema_failures.push_back(e.what());
            error(section, name, e.what());
            return std::nullopt;
        }
    }

    std::optional<CsvTable> load_csv(const std::string &section, const std::string &name, const std::string &file,
                                     const std::vector<std::string> &columns, const char *kind) {
        if (!fs::exists(path(file))) {
            absent(section, name, file);
            return std::nullopt;
        }
        try {
            return read_csv(path(file), columns, kind);
        } catch (const Error &e) {
            schema_failures.push_back(e.what());
            error(section, name, e.what());
            return std::nullopt;
        }
    }
};

void report_table1(ReportBuilder &rb, const Json &ref) {
    const std::string sec = "Table 1";
    const auto doc = rb.load(sec, "m=6 standard run", "sim_m6_standard_summary.json");
    if (!doc) return;
    try {
        const bool matches = doc->at("m") == 6 && doc->at("marked") == ref.at("marked").get<int>() &&
                             std::abs(doc->at("phi").get<double>() - kPi) < 1e-12 &&
                             std::abs(std::remainder(doc->at("zeta").get<double>() - kPi, kTwoPi)) < 1e-12 &&
                             doc->at("iterations_run") == ref.at("iterations").get<int>();
        if (!matches) {
            rb.rows.push_back({sec, "m=6 standard run", {}, {}, {}, "skipped",
                               "summary is not the m=6, marked=2, phi=zeta=pi, k=9 configuration"});
            return;
        }
        const Json &agg = doc->at("aggregate");
        const double tol = ref.at("tolerance").get<double>();
        std::size_t idx = 0;
        for (const auto &e : ref.at("entries")) {
            const std::string name = e.at("name").get<std::string>();
            rb.check(sec, name, agg.at(name).get<double>(), e.at("value").get<double>(), tol);
            rb.check(sec, name + " count", agg.at("counts").at(idx).get<double>(), e.at("count").get<double>(), 0.0);
            ++idx;
        }
        rb.check(sec, "oracle_calls", doc->at("oracle_calls").get<double>(),
                 kOracleCallsPerIteration * ref.at("iterations").get<double>(), 0.0);
    } catch (const Json::exception &e) {
        rb.schema_failures.push_back(fmt::format("sim_m6_standard_summary.json: {}", e.what()));
        rb.error(sec, "m=6 standard run", e.what());
    }
}

void report_iteration_count(ReportBuilder &rb, const Json &ref) {
    for (const auto &e : ref.at("entries")) {
        const int m = e.at("m").get<int>();
        rb.check("Iteration count", fmt::format("k(m={})", m), iteration_count(m), e.at("value").get<double>(), 0.0);
    }
}

void report_fig2(ReportBuilder &rb, const Json &ref) {
    const std::string sec = "Fig. 2 even/odd";
    const auto t = rb.load_csv(sec, "p(2i) vs p(2i+1)", "fig2_trace.csv", kTraceColumns, "trace");
    if (!t) return;
    const auto p = t->column("p_marked");
    const int n = ref.at("iterations").get<int>();
    if (static_cast<int>(p.size()) < n + 2) {
        rb.rows.push_back({sec, "p(2i) vs p(2i+1)", {}, {}, {}, "error",
                           fmt::format("fig2_trace.csv holds {} steps; rerun simulate with --iterations {}",
                                       p.size() - 1, n + 1)});
        return;
    }
    double worst = 0.0;
    for (int i = 1; 2 * i < n + 1; ++i) {
        worst = std::max(worst, std::abs(p[2 * i] - p[2 * i + 1]) / p[2 * i + 1]);
    }
    rb.check(sec, "max relative difference", worst, 0.0, ref.at("relative_tolerance").get<double>(),
             fmt::format("over iterations 1..{}", n + 1));
}

void report_fig4(ReportBuilder &rb, const Json &ref) {
    const std::string sec = "Fig. 4 alternating";
    const auto a = rb.load_csv(sec, "standard distribution", "sim_m6_standard_distribution.csv", kDistributionColumns,
                               "distribution");
    const auto b = rb.load_csv(sec, "alternating distribution", "sim_m6_alternating_distribution.csv",
                               kDistributionColumns, "distribution");
    if (a && b) {
        const auto pa = a->column("probability");
        const auto pb = b->column("probability");
        if (pa.size() != pb.size()) {
            rb.error(sec, "max abs difference", "distributions have different lengths");
        } else {
            double worst = 0.0;
            for (std::size_t j = 0; j < pa.size(); ++j) worst = std::max(worst, std::abs(pa[j] - pb[j]));
            rb.check(sec, "max abs difference", worst, 0.0, ref.at("max_abs_tolerance").get<double>(),
                     "final node distributions");
        }
    }
    const auto sa = rb.load(sec, "standard oracle calls", "sim_m6_standard_summary.json");
    const auto sb = rb.load(sec, "alternating oracle calls", "sim_m6_alternating_summary.json");
    if (sa && sb) {
        const double ca = sa->value("oracle_calls", 0.0), cb = sb->value("oracle_calls", 0.0);
        rb.check(sec, "oracle call ratio", cb, ca / 2.0, kOracleCallsPerIteration,
                 fmt::format("{} vs {} (half, within one iteration)", cb, ca));
    }
}

void report_table3(ReportBuilder &rb, const Json &ref) {
    const std::string sec = "Table 3";
    const double tol = ref.at("tolerance").get<double>();
    std::map<std::string, std::optional<Json>> cache;
    for (const auto &e : ref.at("entries")) {
        const int m = e.at("m").get<int>();
        const std::string law = e.at("law").get<std::string>();
        const std::string quantity = e.at("quantity").get<std::string>();
        const std::string name = fmt::format("{}(m={}, {})", quantity, m, law);
        const std::string file = lambda_file(m, law);
        if (law == "nl-ml" && !fs::exists(rb.path(file)) && !rb.ctx.cfg.alpha_table.count(m)) {
            rb.rows.push_back({sec, name, {}, e.at("value").get<double>(), tol, "skipped", "alpha_ml not provided"});
            continue;
        }
        if (!cache.count(file)) {
            if (!fs::exists(rb.path(file))) {
                rb.missing.insert(file);
                cache[file] = std::nullopt;
            } else {
                try {
                    cache[file] = read_json(rb.path(file));
                } catch (const Error &err) {
                    rb.schema_failures.push_back(err.what());
                    cache[file] = std::nullopt;
                }
            }
        }
        const auto &doc = cache[file];
        if (!doc) {
            rb.rows.push_back({sec, name, {}, e.at("value").get<double>(), tol, "missing", file});
            continue;
        }
        rb.check(sec, name, doc->value(quantity, std::nan("")), e.at("value").get<double>(), tol);
    }
}

/// Every CSV in the output directory must parse under its declared kind.
void report_schemas(ReportBuilder &rb) {
    if (!fs::exists(rb.ctx.cfg.out)) return;
    static const std::map<std::string, const std::vector<std::string> *> layouts{
        {"sweep", &kSweepColumns},   {"heatmap", &kHeatmapColumns}, {"distribution", &kDistributionColumns},
        {"trace", &kTraceColumns},   {"lambda", &kLambdaColumns},   {"prognosis", &kPrognosisColumns}};
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(rb.ctx.cfg.out)) {
        if (entry.path().extension() == ".csv") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto &p : files) {
        std::ifstream in(p, std::ios::binary);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::string kind;
        std::istringstream lines(text);
        for (std::string line; std::getline(lines, line) && line.starts_with('#');) {
            if (line.starts_with("# kind:")) {
                kind = line.substr(7);
                kind.erase(0, kind.find_first_not_of(' '));
                while (!kind.empty() && (kind.back() == '\r' || kind.back() == ' ')) kind.pop_back();
            }
        }
        const auto layout = layouts.find(kind);
        try {
            if (layout == layouts.end()) throw SchemaError(fmt::format("{}: unknown or missing kind", p.string()));
            const CsvTable t = parse_csv(text, *layout->second, kind, p.string());
            if (kind == "sweep") sweep_from_table(t);
        } catch (const Error &e) {
            const std::string what = e.what();
            if (std::find(rb.schema_failures.begin(), rb.schema_failures.end(), what) == rb.schema_failures.end()) {
                rb.schema_failures.push_back(what);
            }
        } catch (const std::exception &e) {
            rb.schema_failures.push_back(fmt::format("{}: {}", p.string(), e.what()));
        }
    }
}

std::string fmt_opt(const std::optional<double> &v) { return v ? fmt::format("{:.7g}", *v) : "-"; }

void cmd_report(Context &ctx) {
    const Json &ref = reference_values();
    ReportBuilder rb{ctx, {}, {}, {}};
    report_table1(rb, ref.at("table1"));
    report_iteration_count(rb, ref.at("iteration_count"));
    report_fig2(rb, ref.at("fig2"));
    report_fig4(rb, ref.at("fig4"));
    report_table3(rb, ref.at("table3"));
    report_schemas(rb);

    std::map<std::string, int> tally;
    for (const auto &r : rb.rows) ++tally[r.status];

    std::string md = "# qrws reproduction report\n\n";
    md += fmt::format("Artifacts: `{}`  \nconfig_hash: `{}`\n\n", ctx.cfg.out.generic_string(), ctx.hash);
    md += fmt::format("pass {} / fail {} / missing {} / skipped {} / error {}\n", tally["pass"], tally["fail"],
                      tally["missing"], tally["skipped"], tally["error"]);
    std::string current;
    Json rows = Json::array();
    std::map<std::string, std::string> sources{{"Table 1", ref.at("table1").at("source")},
                                               {"Iteration count", ref.at("iteration_count").at("source")},
                                               {"Fig. 2 even/odd", ref.at("fig2").at("source")},
                                               {"Fig. 4 alternating", ref.at("fig4").at("source")},
                                               {"Table 3", ref.at("table3").at("source")}};
    for (const auto &r : rb.rows) {
        if (r.section != current) {
            current = r.section;
            md += fmt::format("\n## {}\n\nReference: {}\n\n| check | computed | reference | tolerance | status | note |\n"
                              "|---|---|---|---|---|---|\n",
                              current, sources[current]);
        }
        md += fmt::format("| {} | {} | {} | {} | {} | {} |\n", r.name, fmt_opt(r.computed), fmt_opt(r.reference),
                          fmt_opt(r.tolerance), r.status, r.note);
        rows.push_back({{"section", r.section},
                        {"name", r.name},
                        {"computed", r.computed ? Json(*r.computed) : Json(nullptr)},
                        {"reference", r.reference ? Json(*r.reference) : Json(nullptr)},
                        {"tolerance", r.tolerance ? Json(*r.tolerance) : Json(nullptr)},
                        {"status", r.status},
                        {"note", r.note}});
    }
    md += "\n## Missing artifacts\n\n";
    if (rb.missing.empty()) md += "none\n";
    for (const auto &f : rb.missing) md += fmt::format("- `{}`\n", f);
    md += "\n## Schema failures\n\n";
    if (rb.schema_failures.empty()) md += "none\n";
    for (const auto &f : rb.schema_failures) md += fmt::format("- {}\n", f);

    fs::create_directories(ctx.cfg.out);
    std::ofstream(ctx.path("report.md"), std::ios::binary) << md;
    ctx.result.written.push_back(ctx.path("report.md"));
    Json doc = ctx.doc("report");
    doc["rows"] = rows;
    doc["missing"] = rb.missing;
    doc["schema_failures"] = rb.schema_failures;
    ctx.json("report.json", doc);

    ctx.result.summary.push_back(fmt::format("pass {} / fail {} / missing {} / skipped {} / error {}", tally["pass"],
                                             tally["fail"], tally["missing"], tally["skipped"], tally["error"]));
    for (const auto &f : rb.missing) ctx.result.summary.push_back("missing: " + f);
    for (const auto &f : rb.schema_failures) ctx.result.summary.push_back("schema failure: " + f);
    if (!rb.schema_failures.empty()) {
        ctx.result.exit_code = 1;
    } else if (!rb.missing.empty()) {
        ctx.result.exit_code = 3;
    }
}

}  // namespace

CommandResult run_command(std::string_view command, const ExperimentConfig &config, std::ostream &log) {
    Json hashed{{"command", command}, {"config", config.to_json()}};
    Context ctx{command, config, log, config_hash(hashed), {}};
    if (command == "simulate") {
        cmd_simulate(ctx);
    } else if (command == "sweep") {
        cmd_sweep(ctx);
    } else if (command == "heatmap") {
        cmd_heatmap(ctx);
    } else if (command == "robustness") {
        cmd_robustness(ctx);
    } else if (command == "fit") {
        cmd_fit(ctx);
    } else if (command == "secondary-fit") {
        cmd_secondary_fit(ctx);
    } else if (command == "extrapolate") {
        cmd_extrapolate(ctx);
    } else if (command == "lambda") {
        cmd_lambda(ctx);
    } else if (command == "report") {
        cmd_report(ctx);
    } else {
        throw ConfigError(fmt::format("unknown command '{}'", command));
    }
    return std::move(ctx.result);
}

}  // namespace qrws
