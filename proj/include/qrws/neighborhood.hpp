// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qrws/walk.hpp"

namespace qrws {

/// Number of nodes at Hamming distance o from a fixed node: binom(m, o).
std::uint64_t neighbor_count(int m, int o);

/// All nodes at Hamming distance exactly o from j, ascending.
std::vector<Node> hamming_neighbors(Node j, int m, int o);

/// Probability mass of a final distribution split by Hamming distance from
/// the marked node: the node itself, first neighbors, second neighbors and
/// everything further out.
struct NeighborAggregate {
    double p_marked = 0.0;
    double p_first_sum = 0.0;
    double p_second_sum = 0.0;
    double residue = 0.0;
    std::uint64_t count_marked = 1;
    std::uint64_t count_first = 0;
    std::uint64_t count_second = 0;
    std::uint64_t count_residue = 0;

    double p_w() const noexcept { return p_marked; }
    double p_f() const noexcept { return p_marked + p_first_sum; }
    double p_s() const noexcept { return p_marked + p_first_sum + p_second_sum; }
};

/// Distributions off normalization by more than this are rejected.
inline constexpr double kAggregateNormTolerance = 1e-9;

NeighborAggregate aggregate(std::span<const double> distribution, Node marked, int m);

enum class MeasurementStrategy { None, First, Second };

std::string_view strategy_name(MeasurementStrategy s) noexcept;
MeasurementStrategy parse_strategy(std::string_view name);

struct MeasurementBudget {
    std::uint64_t classical_measurements = 0;
    /// Oracle calls of one run (two per iteration).
    std::uint64_t oracle_calls_per_run = 0;
    /// Iterations plus the classical neighbor measurements, reported for the
    /// first-neighbor strategy only (zero otherwise).
    std::uint64_t total_cost_first = 0;
};

MeasurementBudget measurement_budget(int m, MeasurementStrategy strategy);

}  // namespace qrws
