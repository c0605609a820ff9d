// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qrws/coin.hpp"

namespace qrws {

using Node = std::uint64_t;

/// Largest supported coin size; the state holds m * 2^m amplitudes.
inline constexpr int kMaxCoinSize = 24;

/// Amplitudes psi(d, j) over coin direction d in [0, m) and hypercube node
/// j in [0, 2^m), stored d-major (index d * 2^m + j). The oracle's control
/// qubit always returns to |0> after an iteration and is not stored.
class WalkState {
  public:
    /// Zero state; throws InvalidDimension unless 2 <= m <= kMaxCoinSize.
    explicit WalkState(int m);

    /// Every amplitude 1/sqrt(m 2^m).
    static WalkState uniform(int m);

    int coin_size() const noexcept { return m_; }
    std::size_t node_count() const noexcept { return std::size_t{1} << m_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }

    Complex &at(int d, Node j) { return amplitudes_[static_cast<std::size_t>(d) * node_count() + j]; }
    const Complex &at(int d, Node j) const { return amplitudes_[static_cast<std::size_t>(d) * node_count() + j]; }

    std::span<Complex> amplitudes() noexcept { return amplitudes_; }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

    /// Contiguous amplitudes of coin direction d over all nodes.
    std::span<Complex> direction(int d) noexcept { return {amplitudes_.data() + d * node_count(), node_count()}; }
    std::span<const Complex> direction(int d) const noexcept {
        return {amplitudes_.data() + d * node_count(), node_count()};
    }

    double norm_squared() const;

    /// p(j) = sum_d |psi(d, j)|^2.
    std::vector<double> node_probabilities() const;

  private:
    int m_;
    std::vector<Complex> amplitudes_;
};

/// Sorted, duplicate-free set of oracle-marked nodes with O(1) membership.
class MarkedSet {
  public:
    MarkedSet(int m, std::vector<Node> nodes);

    std::span<const Node> nodes() const noexcept { return nodes_; }
    bool contains(Node j) const noexcept { return j < flags_.size() && flags_[j] != 0; }
    bool empty() const noexcept { return nodes_.empty(); }

  private:
    std::vector<Node> nodes_;
    std::vector<std::uint8_t> flags_;
};

enum class RunMode { Standard, Alternating };

/// Even steps of the alternating runner: `Literal` applies only C0 to every
/// coin block; `WithShift` applies C0 followed by the shift.
enum class AlternatingVariant { Literal, WithShift };

inline constexpr int kOracleCallsPerIteration = 2;

std::string_view mode_name(RunMode mode) noexcept;
RunMode parse_mode(std::string_view name);
std::string_view variant_name(AlternatingVariant variant) noexcept;
AlternatingVariant parse_variant(std::string_view name);

struct RunConfig {
    int m = 6;
    std::vector<Node> marked{2};
    CoinSpec coin{6, kPi, kPi};
    /// nullopt selects iteration_count(m).
    std::optional<int> iterations;
    RunMode mode = RunMode::Standard;
    AlternatingVariant variant = AlternatingVariant::WithShift;
};

struct SimulationResult {
    std::vector<double> distribution;
    /// trace[t] is the total marked-node probability after t steps; trace[0]
    /// is the initial state.
    std::vector<double> trace;
    int oracle_calls = 0;
    int iterations_run = 0;
};

WalkState uniform_initial_state(int m);

/// C0 on the coin block of every unmarked node and -I on every marked block.
void apply_conditional_coin(WalkState &state, const HouseholderCoin &coin, const MarkedSet &marked);

/// Moves psi(d, j) to psi(d, j ^ 2^d).
void apply_shift(WalkState &state);

/// Conditional coin then shift; makes kOracleCallsPerIteration oracle calls.
void standard_iteration(WalkState &state, const HouseholderCoin &coin, const MarkedSet &marked);

/// Oracle-free step. No oracle calls.
void walk_only_iteration(WalkState &state, const HouseholderCoin &coin, AlternatingVariant variant);

/// ceil((pi / 2) sqrt(2^(m - 1))).
int iteration_count(int m);

SimulationResult run_standard(const RunConfig &config);

/// Steps are counted from zero: odd steps are standard iterations, even steps
/// are walk-only, so oracle calls are made on floor(k / 2) steps.
SimulationResult run_alternating(const RunConfig &config);

/// Dispatches on config.mode.
SimulationResult run(const RunConfig &config);

}  // namespace qrws
