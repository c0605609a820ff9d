// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrws/neighborhood.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "qrws/errors.hpp"

namespace qrws {

std::uint64_t neighbor_count(int m, int o) {
    if (m < 0 || o < 0 || o > m) {
        throw DomainError(fmt::format("neighbor order o={} outside [0, m={}]", o, m));
    }
    // Multiplicative form stays exact: each partial product is a binomial.
    std::uint64_t c = 1;
    const int r = std::min(o, m - o);
    for (int i = 1; i <= r; ++i) {
        c = c * static_cast<std::uint64_t>(m - r + i) / static_cast<std::uint64_t>(i);
    }
    return c;
}

std::vector<Node> hamming_neighbors(Node j, int m, int o) {
    if (m < 1 || m > 63) {
        throw DomainError(fmt::format("coin size m={} unsupported", m));
    }
    neighbor_count(m, o);  // domain check
    const Node n = Node{1} << m;
    if (j >= n) {
        throw DomainError(fmt::format("node {} is outside [0, {})", j, n));
    }
    std::vector<Node> out;
    out.reserve(neighbor_count(m, o));
    if (o == 0) {
        out.push_back(j);
        return out;
    }
    // Enumerate o-bit masks in increasing order (Gosper's hack).
    Node mask = (Node{1} << o) - 1;
    while (mask < n) {
        out.push_back(j ^ mask);
        const Node lowest = mask & (~mask + 1);
        const Node ripple = mask + lowest;
        mask = (((ripple ^ mask) >> 2) / lowest) | ripple;
    }
    std::sort(out.begin(), out.end());
    return out;
}

NeighborAggregate aggregate(std::span<const double> distribution, Node marked, int m) {
    if (m < 2 || m > kMaxCoinSize) {
        throw InvalidDimension(fmt::format("coin size m must be in [2, {}], got {}", kMaxCoinSize, m));
    }
    const Node n = Node{1} << m;
    if (distribution.size() != n) {
        throw InvariantError(fmt::format("distribution has {} entries, expected {}", distribution.size(), n));
    }
    if (marked >= n) {
        throw DomainError(fmt::format("marked node {} is outside [0, {})", marked, n));
    }
    NeighborAggregate agg;
    double total = 0.0;
    for (Node j = 0; j < n; ++j) {
        const double p = distribution[j];
        total += p;
        switch (std::popcount(j ^ marked)) {
            case 0:
                agg.p_marked += p;
                break;
            case 1:
                agg.p_first_sum += p;
                ++agg.count_first;
                break;
            case 2:
                agg.p_second_sum += p;
                ++agg.count_second;
                break;
            default:
                agg.residue += p;
                ++agg.count_residue;
        }
    }
    if (std::abs(total - 1.0) > kAggregateNormTolerance) {
        throw InvariantError(fmt::format("distribution sums to {:.17g}, not 1", total));
    }
    return agg;
}

std::string_view strategy_name(MeasurementStrategy s) noexcept {
    switch (s) {
        case MeasurementStrategy::None:
            return "none";
        case MeasurementStrategy::First:
            return "first";
        case MeasurementStrategy::Second:
            return "second";
    }
    return "none";
}

MeasurementStrategy parse_strategy(std::string_view name) {
    if (name == "none") return MeasurementStrategy::None;
    if (name == "first") return MeasurementStrategy::First;
    if (name == "second") return MeasurementStrategy::Second;
    throw ConfigError(fmt::format("unknown measurement strategy '{}'", name));
}

MeasurementBudget measurement_budget(int m, MeasurementStrategy strategy) {
    if (m < 2) {
        throw InvalidDimension(fmt::format("coin size m must be >= 2, got {}", m));
    }
    const auto mm = static_cast<std::uint64_t>(m);
    const auto k = static_cast<std::uint64_t>(iteration_count(m));
    MeasurementBudget b;
    b.oracle_calls_per_run = kOracleCallsPerIteration * k;
    switch (strategy) {
        case MeasurementStrategy::None:
            b.classical_measurements = 1;
            break;
        case MeasurementStrategy::First:
            b.classical_measurements = 1 + mm;
            b.total_cost_first = k + mm;
            break;
        case MeasurementStrategy::Second:
            b.classical_measurements = 1 + mm + mm * (mm - 1) / 2;
            break;
    }
    return b;
}

}  // namespace qrws
