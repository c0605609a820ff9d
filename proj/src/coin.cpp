// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrws/coin.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "qrws/errors.hpp"

namespace qrws {

namespace {

Complex unit_phase(double angle) {
    // Reduce first so that large unreduced zeta values keep full precision.
    double r = std::fmod(angle, kTwoPi);
    return {std::cos(r), std::sin(r)};
}

}  // namespace

HouseholderCoin::HouseholderCoin(const CoinSpec &spec)
    : m_(spec.m),
      multiplier_(unit_phase(spec.zeta)),
      projector_weight_((1.0 - unit_phase(spec.phi)) / static_cast<double>(spec.m)) {
    if (spec.m < 1) {
        throw InvalidDimension(fmt::format("coin size must be positive, got {}", spec.m));
    }
}

void HouseholderCoin::apply(std::span<Complex> block) const {
    Complex sum = 0.0;
    for (const Complex &a : block) {
        sum += a;
    }
    const Complex shift = projector_weight_ * sum;
    for (Complex &a : block) {
        a = multiplier_ * (a - shift);
    }
}

std::vector<Complex> apply_householder_block(std::span<const Complex> block, double phi, double zeta) {
    HouseholderCoin coin({static_cast<int>(block.size()), phi, zeta});
    std::vector<Complex> out(block.begin(), block.end());
    coin.apply(out);
    return out;
}

Eigen::MatrixXcd coin_matrix(double phi, double zeta, int m) {
    if (m < 2) {
        throw InvalidDimension(fmt::format("coin size must be >= 2, got {}", m));
    }
    const Complex mult = unit_phase(zeta);
    const Complex w = (1.0 - unit_phase(phi)) / static_cast<double>(m);
    Eigen::MatrixXcd c(m, m);
    for (int r = 0; r < m; ++r) {
        for (int col = 0; col < m; ++col) {
            c(r, col) = mult * ((r == col ? 1.0 : 0.0) - w);
        }
    }
    return c;
}

std::string_view law_name(LawKind kind) noexcept {
    switch (kind) {
        case LawKind::ConstZeta:
            return "const";
        case LawKind::Linear:
            return "linear";
        case LawKind::NonlinearFixed:
            return "nl-fixed";
        case LawKind::NonlinearMl:
            return "nl-ml";
    }
    return "unknown";
}

LawKind parse_law_kind(std::string_view name) {
    if (name == "const") return LawKind::ConstZeta;
    if (name == "linear") return LawKind::Linear;
    if (name == "nl-fixed") return LawKind::NonlinearFixed;
    if (name == "nl-ml") return LawKind::NonlinearMl;
    throw ConfigError(fmt::format("unknown dependence law '{}' (expected const, linear, nl-fixed or nl-ml)", name));
}

DependenceLaw::DependenceLaw(LawKind kind, std::map<int, double> alpha_ml)
    : kind_(kind), alpha_ml_(std::move(alpha_ml)) {}

DependenceLaw DependenceLaw::parse(std::string_view name, std::map<int, double> alpha_ml) {
    return DependenceLaw(parse_law_kind(name), std::move(alpha_ml));
}

std::string_view DependenceLaw::name() const noexcept { return law_name(kind_); }

bool DependenceLaw::has_alpha(int m) const { return alpha_ml_.contains(m); }

double DependenceLaw::alpha(int m) const {
    auto it = alpha_ml_.find(m);
    if (it == alpha_ml_.end()) {
        throw ConfigError(fmt::format("law nl-ml requires alpha_ml for coin size {} (supply an alpha table)", m));
    }
    return it->second;
}

double zeta_of_phi(const DependenceLaw &law, double phi, int m) {
    if (!(phi > 0.0 && phi < kTwoPi)) {
        throw DomainError(fmt::format("phi must lie in (0, 2pi), got {}", phi));
    }
    const double linear = -2.0 * phi + 3.0 * kPi;
    switch (law.kind()) {
        case LawKind::ConstZeta:
            return kPi;
        case LawKind::Linear:
            return linear;
        case LawKind::NonlinearFixed:
            return linear - std::sin(2.0 * phi) / (2.0 * kPi);
        case LawKind::NonlinearMl:
            return linear + law.alpha(m) * std::sin(2.0 * phi);
    }
    return kPi;
}

CoinSpec make_coin(const DependenceLaw &law, double phi, int m) { return {m, phi, zeta_of_phi(law, phi, m)}; }

std::map<int, double> parse_alpha_table(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(fmt::format("alpha table is not valid JSON: {}", e.what()));
    }
    if (doc.is_object() && doc.contains("alpha_ml")) {
        doc = doc["alpha_ml"];
    }
    if (!doc.is_object()) {
        throw ConfigError("alpha table must be a JSON object mapping coin size to alpha");
    }
    std::map<int, double> out;
    for (const auto &[key, value] : doc.items()) {
        int m = 0;
        try {
            std::size_t used = 0;
            m = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception &) {
            throw ConfigError(fmt::format("alpha table key '{}' is not an integer coin size", key));
        }
        if (!value.is_number()) {
            throw ConfigError(fmt::format("alpha table entry for m={} is not a number", m));
        }
        out[m] = value.get<double>();
    }
    return out;
}

std::map<int, double> load_alpha_table(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingArtifact(fmt::format("cannot open alpha table '{}'", path));
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_alpha_table(buf.str());
}

}  // namespace qrws
