// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrws/walk.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "qrws/errors.hpp"

namespace qrws {

namespace {

void check_dimension(int m) {
    if (m < 2 || m > kMaxCoinSize) {
        throw InvalidDimension(fmt::format("coin size m must be in [2, {}], got {}", kMaxCoinSize, m));
    }
}

double marked_probability(const WalkState &state, const MarkedSet &marked) {
    double p = 0.0;
    for (Node h : marked.nodes()) {
        for (int d = 0; d < state.coin_size(); ++d) {
            p += std::norm(state.at(d, h));
        }
    }
    return p;
}

void validate(const RunConfig &config) {
    check_dimension(config.m);
    if (config.coin.m != config.m) {
        throw ConfigError(fmt::format("coin size {} does not match walk dimension {}", config.coin.m, config.m));
    }
    if (config.iterations && *config.iterations < 0) {
        throw ConfigError(fmt::format("iterations must be non-negative, got {}", *config.iterations));
    }
}

}  // namespace

WalkState::WalkState(int m) : m_(m) {
    check_dimension(m);
    amplitudes_.assign(static_cast<std::size_t>(m) << m, Complex{0.0, 0.0});
}

WalkState WalkState::uniform(int m) {
    WalkState s(m);
    const double a = 1.0 / std::sqrt(static_cast<double>(s.size()));
    std::fill(s.amplitudes_.begin(), s.amplitudes_.end(), Complex{a, 0.0});
    return s;
}

double WalkState::norm_squared() const {
    double total = 0.0;
    for (const Complex &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> WalkState::node_probabilities() const {
    std::vector<double> p(node_count(), 0.0);
    for (int d = 0; d < m_; ++d) {
        auto row = direction(d);
        for (std::size_t j = 0; j < row.size(); ++j) {
            p[j] += std::norm(row[j]);
        }
    }
    return p;
}

MarkedSet::MarkedSet(int m, std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    check_dimension(m);
    const Node n = Node{1} << m;
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    flags_.assign(n, 0);
    for (Node h : nodes_) {
        if (h >= n) {
            throw ConfigError(fmt::format("marked node {} is outside [0, {})", h, n));
        }
        flags_[h] = 1;
    }
}

std::string_view mode_name(RunMode mode) noexcept {
    return mode == RunMode::Standard ? "standard" : "alternating";
}

RunMode parse_mode(std::string_view name) {
    if (name == "standard") return RunMode::Standard;
    if (name == "alternating") return RunMode::Alternating;
    throw ConfigError(fmt::format("unknown mode '{}' (expected standard or alternating)", name));
}

std::string_view variant_name(AlternatingVariant variant) noexcept {
    return variant == AlternatingVariant::Literal ? "literal" : "with_shift";
}

AlternatingVariant parse_variant(std::string_view name) {
    if (name == "literal") return AlternatingVariant::Literal;
    if (name == "with_shift" || name == "with-shift") return AlternatingVariant::WithShift;
    throw ConfigError(fmt::format("unknown alternating variant '{}' (expected literal or with_shift)", name));
}

WalkState uniform_initial_state(int m) { return WalkState::uniform(m); }

void apply_conditional_coin(WalkState &state, const HouseholderCoin &coin, const MarkedSet &marked) {
    const int m = state.coin_size();
    if (coin.size() != m) {
        throw ConfigError(fmt::format("coin size {} does not match walk dimension {}", coin.size(), m));
    }
    const std::size_t n = state.node_count();

    // Block sums sum_d psi(d, j), accumulated row by row to stay contiguous.
    std::vector<Complex> sums(n, Complex{0.0, 0.0});
    for (int d = 0; d < m; ++d) {
        auto row = state.direction(d);
        for (std::size_t j = 0; j < n; ++j) {
            sums[j] += row[j];
        }
    }
    const Complex w = coin.projector_weight();
    for (std::size_t j = 0; j < n; ++j) {
        sums[j] *= w;
    }

    const Complex mult = coin.multiplier();
    for (int d = 0; d < m; ++d) {
        auto row = state.direction(d);
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = marked.contains(j) ? -row[j] : mult * (row[j] - sums[j]);
        }
    }
}

void apply_shift(WalkState &state) {
    const std::size_t n = state.node_count();
    for (int d = 0; d < state.coin_size(); ++d) {
        auto row = state.direction(d);
        const std::size_t bit = std::size_t{1} << d;
        for (std::size_t j = 0; j < n; ++j) {
            if ((j & bit) == 0) {
                std::swap(row[j], row[j | bit]);
            }
        }
    }
}

void standard_iteration(WalkState &state, const HouseholderCoin &coin, const MarkedSet &marked) {
    apply_conditional_coin(state, coin, marked);
    apply_shift(state);
}

void walk_only_iteration(WalkState &state, const HouseholderCoin &coin, AlternatingVariant variant) {
    static const MarkedSet kNone(2, {});
    apply_conditional_coin(state, coin, kNone);
    if (variant == AlternatingVariant::WithShift) {
        apply_shift(state);
    }
}

int iteration_count(int m) {
    if (m < 2) {
        throw InvalidDimension(fmt::format("coin size m must be >= 2, got {}", m));
    }
    return static_cast<int>(std::ceil(kPi / 2.0 * std::sqrt(std::ldexp(1.0, m - 1))));
}

namespace {

template <typename Step>
SimulationResult run_steps(const RunConfig &config, Step &&step) {
    validate(config);
    const MarkedSet marked(config.m, config.marked);
    const HouseholderCoin coin(config.coin);
    const int k = config.iterations.value_or(iteration_count(config.m));

    WalkState state = WalkState::uniform(config.m);
    SimulationResult result;
    result.trace.reserve(static_cast<std::size_t>(k) + 1);
    result.trace.push_back(marked_probability(state, marked));
    for (int t = 0; t < k; ++t) {
        result.oracle_calls += step(state, coin, marked, t);
        result.trace.push_back(marked_probability(state, marked));
    }
    result.iterations_run = k;
    result.distribution = state.node_probabilities();
    return result;
}

}  // namespace

SimulationResult run_standard(const RunConfig &config) {
    return run_steps(config, [](WalkState &s, const HouseholderCoin &c, const MarkedSet &mk, int) {
        standard_iteration(s, c, mk);
        return kOracleCallsPerIteration;
    });
}

SimulationResult run_alternating(const RunConfig &config) {
    const AlternatingVariant variant = config.variant;
    return run_steps(config, [variant](WalkState &s, const HouseholderCoin &c, const MarkedSet &mk, int t) {
        if (t % 2 == 1) {
            standard_iteration(s, c, mk);
            return kOracleCallsPerIteration;
        }
        walk_only_iteration(s, c, variant);
        return 0;
    });
}

SimulationResult run(const RunConfig &config) {
    return config.mode == RunMode::Standard ? run_standard(config) : run_alternating(config);
}

}  // namespace qrws
