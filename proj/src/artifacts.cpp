// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrws/artifacts.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "qrws/errors.hpp"

namespace qrws {

const std::vector<std::string> kSweepColumns{"phi", "zeta", "p_w", "p_f", "p_s"};
const std::vector<std::string> kHeatmapColumns{"phi", "zeta", "p_w"};
const std::vector<std::string> kDistributionColumns{"node", "probability"};
const std::vector<std::string> kTraceColumns{"iteration", "p_marked"};
const std::vector<std::string> kLambdaColumns{"phi", "lambda1", "lambda2"};
const std::vector<std::string> kPrognosisColumns{"phi", "p"};

std::string config_hash(const Json &config) {
    const std::string text = config.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return fmt::format("{:016x}", h);
}

std::vector<double> CsvTable::column(std::string_view name) const {
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c] == name) {
            std::vector<double> out;
            out.reserve(rows.size());
            for (const auto &row : rows) out.push_back(row[c]);
            return out;
        }
    }
    throw SchemaError(fmt::format("CSV has no column '{}'", name));
}

std::string format_csv(const CsvTable &table) {
    std::string out;
    for (const auto &[key, value] : table.meta) {
        out += fmt::format("# {}: {}\n", key, value);
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out += (c ? "," : "") + table.columns[c];
    }
    out += '\n';
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += fmt::format("{:.17g}", row[c]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::filesystem::path &path, const CsvTable &table) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Validation, fmt::format("cannot write '{}'", path.string()));
    out << format_csv(table);
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

bool parse_double(const std::string &cell, double &value) {
    if (cell.empty()) return false;
    if (cell == "nan" || cell == "NaN") {
        value = std::numeric_limits<double>::quiet_NaN();
        return true;
    }
    const char *first = cell.data();
    const char *last = first + cell.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc() && ptr == last;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingArtifact(fmt::format("missing artifact '{}'", path.string()));
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

CsvTable parse_csv(std::string_view text, std::span<const std::string> expected_columns, std::string_view expected_kind,
                   std::string_view source) {
    CsvTable table;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const std::string line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (have_header) {
                throw SchemaError(fmt::format("{}: line {}: metadata after the header row", source, line_no));
            }
            const std::size_t colon = line.find(':');
            if (colon != std::string::npos) {
                table.meta[trim(std::string_view(line).substr(1, colon - 1))] =
                    trim(std::string_view(line).substr(colon + 1));
            }
            continue;
        }
        if (!have_header) {
            table.columns = split(line);
            if (!std::equal(table.columns.begin(), table.columns.end(), expected_columns.begin(),
                            expected_columns.end())) {
                std::string want;
                for (const auto &c : expected_columns) want += (want.empty() ? "" : ",") + c;
                throw SchemaError(fmt::format("{}: line {}: header '{}' does not match expected '{}'", source, line_no,
                                              line, want));
            }
            have_header = true;
            continue;
        }
        const auto cells = split(line);
        if (cells.size() != table.columns.size()) {
            throw SchemaError(fmt::format("{}: line {} (data row {}): expected {} fields, got {}", source, line_no,
                                          table.rows.size() + 1, table.columns.size(), cells.size()));
        }
        std::vector<double> row(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (!parse_double(cells[c], row[c])) {
                throw SchemaError(fmt::format("{}: line {} (data row {}): field '{}' is not a number: '{}'", source,
                                              line_no, table.rows.size() + 1, table.columns[c], cells[c]));
            }
        }
        table.rows.push_back(std::move(row));
    }
    if (!have_header) {
        throw SchemaError(fmt::format("{}: no header row", source));
    }
    auto version = table.meta.find("schema_version");
    if (version == table.meta.end()) {
        throw SchemaError(fmt::format("{}: missing schema_version metadata", source));
    }
    if (version->second != std::to_string(kSchemaVersion)) {
        throw SchemaError(fmt::format("{}: unsupported schema_version {} (expected {})", source, version->second,
                                      kSchemaVersion));
    }
    if (!expected_kind.empty()) {
        auto kind = table.meta.find("kind");
        if (kind == table.meta.end() || kind->second != expected_kind) {
            throw SchemaError(fmt::format("{}: expected a '{}' artifact", source, expected_kind));
        }
    }
    return table;
}

CsvTable read_csv(const std::filesystem::path &path, std::span<const std::string> expected_columns,
                  std::string_view expected_kind) {
    return parse_csv(read_file(path), expected_columns, expected_kind, path.string());
}

void write_json(const std::filesystem::path &path, const Json &doc) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Validation, fmt::format("cannot write '{}'", path.string()));
    out << doc.dump(2) << '\n';
}

Json read_json(const std::filesystem::path &path) {
    const std::string text = read_file(path);
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception &e) {
        throw SchemaError(fmt::format("{}: invalid JSON: {}", path.string(), e.what()));
    }
    if (!doc.is_object() || !doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion) {
        throw SchemaError(fmt::format("{}: missing or unsupported schema_version", path.string()));
    }
    return doc;
}

CsvTable sweep_table(const PhiSweep &sweep, const std::string &hash) {
    CsvTable t;
    t.meta = {{"schema_version", std::to_string(kSchemaVersion)},
              {"kind", "sweep"},
              {"config_hash", hash},
              {"m", std::to_string(sweep.m)},
              {"law", sweep.law},
              {"marked", std::to_string(sweep.marked)}};
    t.columns = kSweepColumns;
    t.rows.reserve(sweep.phi.size());
    for (std::size_t i = 0; i < sweep.phi.size(); ++i) {
        t.rows.push_back({sweep.phi[i], sweep.zeta[i], sweep.p_w[i], sweep.p_f[i], sweep.p_s[i]});
    }
    return t;
}

PhiSweep sweep_from_table(const CsvTable &table) {
    PhiSweep s;
    try {
        s.m = std::stoi(table.meta.at("m"));
        s.law = table.meta.at("law");
        s.marked = std::stoull(table.meta.at("marked"));
    } catch (const std::exception &) {
        throw SchemaError("sweep CSV lacks valid m / law / marked metadata");
    }
    s.phi = table.column("phi");
    s.zeta = table.column("zeta");
    s.p_w = table.column("p_w");
    s.p_f = table.column("p_f");
    s.p_s = table.column("p_s");
    for (std::size_t i = 0; i < s.phi.size(); ++i) {
        if (!(s.p_w[i] <= s.p_f[i] + 1e-12 && s.p_f[i] <= s.p_s[i] + 1e-12 && s.p_w[i] >= 0.0 && s.p_s[i] <= 1.0 + 1e-9)) {
            throw SchemaError(fmt::format("sweep CSV data row {}: probabilities violate 0 <= p_w <= p_f <= p_s <= 1", i + 1));
        }
    }
    return s;
}

PhiSweep read_sweep_csv(const std::filesystem::path &path) {
    const CsvTable t = read_csv(path, kSweepColumns, "sweep");
    try {
        return sweep_from_table(t);
    } catch (const SchemaError &e) {
        throw SchemaError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

CsvTable heatmap_table(const Heatmap &heatmap, const std::string &hash) {
    CsvTable t;
    t.meta = {{"schema_version", std::to_string(kSchemaVersion)},
              {"kind", "heatmap"},
              {"config_hash", hash},
              {"m", std::to_string(heatmap.m)},
              {"marked", std::to_string(heatmap.marked)}};
    t.columns = kHeatmapColumns;
    for (std::size_t i = 0; i < heatmap.phi.size(); ++i) {
        for (std::size_t k = 0; k < heatmap.zeta.size(); ++k) {
            t.rows.push_back({heatmap.phi[i], heatmap.zeta[k], heatmap.at(i, k)});
        }
    }
    return t;
}

Json fit_to_json(const HillFit &fit, std::string_view law, NeighborLevel level, int m, const std::string &hash) {
    return Json{{"schema_version", kSchemaVersion},
                {"kind", "fit"},
                {"config_hash", hash},
                {"law", law},
                {"level", level_name(level)},
                {"m", m},
                {"b", fit.params.b},
                {"kappa", fit.params.kappa},
                {"eta", fit.params.eta},
                {"sigma", fit.sigma},
                {"window", {fit.window.lo, fit.window.hi}},
                {"samples", fit.samples},
                {"iterations", fit.iterations}};
}

CoinSizeFit fit_from_json(const Json &doc) {
    try {
        CoinSizeFit f;
        f.m = doc.at("m").get<int>();
        f.fit.params = {doc.at("b").get<double>(), doc.at("kappa").get<double>(), doc.at("eta").get<double>()};
        f.fit.sigma = doc.at("sigma").get<double>();
        f.fit.window = {doc.at("window").at(0).get<double>(), doc.at("window").at(1).get<double>()};
        f.fit.samples = doc.value("samples", std::size_t{0});
        f.fit.iterations = doc.value("iterations", 0);
        return f;
    } catch (const Json::exception &e) {
        throw SchemaError(fmt::format("fit JSON is malformed: {}", e.what()));
    }
}

namespace {

Json secondary_curve_json(const SecondaryCurve &c, const SecondaryFit &fit) {
    Json j{{"law", fit.law}, {"level", level_name(fit.level)}, {"param", secondary_param_name(c.param)}};
    const int count = coefficient_count(c.param);
    Json frozen = Json::array();
    for (int k = 0; k < 4; ++k) {
        const std::string key = fmt::format("c{}", k + 1);
        if (k < count) {
            j[key] = c.c[k];
            if (c.frozen[k]) frozen.push_back(key);
        } else {
            j[key] = nullptr;
        }
    }
    j["frozen"] = frozen;
    j["sigma"] = c.sigma;
    return j;
}

SecondaryCurve secondary_curve_from(const Json &j) {
    SecondaryCurve c;
    c.param = parse_secondary_param(j.at("param").get<std::string>());
    const int count = coefficient_count(c.param);
    for (int k = 0; k < count; ++k) {
        c.c[k] = j.at(fmt::format("c{}", k + 1)).get<double>();
    }
    for (const auto &name : j.value("frozen", Json::array())) {
        const std::string s = name.get<std::string>();
        if (s.size() == 2 && s[0] == 'c' && s[1] >= '1' && s[1] <= '4') c.frozen[s[1] - '1'] = true;
    }
    c.sigma = j.value("sigma", 0.0);
    return c;
}

}  // namespace

Json secondary_to_json(const SecondaryFit &fit, const std::string &hash) {
    return Json{{"schema_version", kSchemaVersion},
                {"kind", "secondary-fit"},
                {"config_hash", hash},
                {"law", fit.law},
                {"level", level_name(fit.level)},
                {"m_range", {fit.m_lo, fit.m_hi}},
                {"params", {secondary_curve_json(fit.b, fit), secondary_curve_json(fit.kappa, fit),
                            secondary_curve_json(fit.eta, fit)}}};
}

SecondaryFit secondary_from_json(const Json &doc) {
    try {
        SecondaryFit f;
        f.law = doc.at("law").get<std::string>();
        f.level = parse_level(doc.at("level").get<std::string>());
        f.m_lo = doc.at("m_range").at(0).get<int>();
        f.m_hi = doc.at("m_range").at(1).get<int>();
        bool seen[3] = {false, false, false};
        for (const auto &p : doc.at("params")) {
            SecondaryCurve c = secondary_curve_from(p);
            switch (c.param) {
                case SecondaryParam::B:
                    f.b = c;
                    seen[0] = true;
                    break;
                case SecondaryParam::Kappa:
                    f.kappa = c;
                    seen[1] = true;
                    break;
                case SecondaryParam::Eta:
                    f.eta = c;
                    seen[2] = true;
                    break;
            }
        }
        if (!seen[0] || !seen[1] || !seen[2]) throw SchemaError("secondary-fit JSON must hold b, kappa and eta");
        return f;
    } catch (const Json::exception &e) {
        throw SchemaError(fmt::format("secondary-fit JSON is malformed: {}", e.what()));
    }
}

Json robustness_to_json(const RobustnessReport &r, int m, std::string_view law, NeighborLevel level) {
    return Json{{"m", m},
                {"law", law},
                {"level", level_name(level)},
                {"omega", r.omega},
                {"phi_max", r.phi_max},
                {"p_max", r.p_max},
                {"epsilon", r.epsilon},
                {"edge_bounded", r.edge_bounded}};
}

}  // namespace qrws
