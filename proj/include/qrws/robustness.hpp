// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrws/coin.hpp"
#include "qrws/walk.hpp"

namespace qrws {

/// W: marked node only. F: plus first neighbors. S: plus second neighbors.
enum class NeighborLevel { W, F, S };

inline constexpr NeighborLevel kAllLevels[] = {NeighborLevel::W, NeighborLevel::F, NeighborLevel::S};

std::string_view level_name(NeighborLevel level) noexcept;
/// Accepts W/F/S (any case) and none/first/second.
NeighborLevel parse_level(std::string_view name);

inline constexpr double kDefaultPhiStep = 0.005;
inline constexpr double kDefaultOmega = 0.9;

/// Uniform grid pi + i * step, |i| * step < pi. Contains pi exactly, is
/// symmetric under phi -> 2 pi - phi and excludes both endpoints.
std::vector<double> phi_grid(double step = kDefaultPhiStep);

/// Samples phi -> p for one (m, law, level).
struct ProbabilityCurve {
    int m = 0;
    std::string law;
    NeighborLevel level = NeighborLevel::W;
    std::vector<double> phi;
    std::vector<double> p;

    /// Throws InvariantError unless phi is strictly increasing on a uniform
    /// grid (1e-12) and every p lies in [0, 1].
    void validate() const;
    double step() const;
};

/// One phi sweep with all three neighbor levels.
struct PhiSweep {
    int m = 0;
    std::string law;
    Node marked = 0;
    std::vector<double> phi;
    std::vector<double> zeta;
    std::vector<double> p_w;
    std::vector<double> p_f;
    std::vector<double> p_s;

    ProbabilityCurve curve(NeighborLevel level) const;
};

/// Runs the standard walk at every grid phi with zeta = zeta_of_phi(law, phi).
/// jobs = 0 uses all cores; the output order is the grid order regardless.
PhiSweep sweep_phi(int m, const DependenceLaw &law, Node marked, std::span<const double> grid, unsigned jobs = 0);

/// P_W over a phi x zeta grid, phi-major.
struct Heatmap {
    int m = 0;
    Node marked = 0;
    std::vector<double> phi;
    std::vector<double> zeta;
    std::vector<double> p_w;

    double at(std::size_t phi_index, std::size_t zeta_index) const { return p_w[phi_index * zeta.size() + zeta_index]; }
};

Heatmap sweep_heatmap(int m, std::span<const double> phi, std::span<const double> zeta, Node marked,
                      unsigned jobs = 0);

struct RobustnessReport {
    double phi_max = 0.0;
    double p_max = 0.0;
    double epsilon = 0.0;
    double omega = kDefaultOmega;
    std::size_t peak_index = 0;
    /// True when every sample out to the domain edge met the bound, in which
    /// case epsilon = min(phi_max, 2 pi - phi_max).
    bool edge_bounded = false;
};

/// Largest symmetric half-width around the peak over which p >= omega * p_max.
/// Peak ties (relative 1e-12) go to the sample closest to pi.
RobustnessReport robustness_epsilon(std::span<const double> phi, std::span<const double> p, double omega = kDefaultOmega);
RobustnessReport robustness_epsilon(const ProbabilityCurve &curve, double omega = kDefaultOmega);

/// Denominators below this are masked (NaN) in the lambda curves.
inline constexpr double kLambdaMaskThreshold = 1e-12;

struct LambdaCurves {
    std::vector<double> phi;
    /// [P_F / P_F(pi)] / [P_W / P_W(pi)]
    std::vector<double> lambda1;
    /// [P_S / P_S(pi)] / [P_F / P_F(pi)]
    std::vector<double> lambda2;
};

LambdaCurves lambda_curves(const ProbabilityCurve &w, const ProbabilityCurve &f, const ProbabilityCurve &s);

/// (integral of lambda over [pi, pi + epsilon]) / epsilon - 1, trapezoid rule
/// on the curve's own grid.
double capital_lambda(std::span<const double> phi, std::span<const double> lambda, double epsilon);

struct LambdaReport {
    LambdaCurves curves;
    double epsilon_w = 0.0;
    double capital_lambda1 = 0.0;
    double capital_lambda2 = 0.0;
    double interval_lo = kPi;
    double interval_hi = kPi;
};

/// Lambda curves plus both interval averages, with epsilon taken from the
/// W-level robustness of the same sweep.
LambdaReport lambda_report(const PhiSweep &sweep, double omega = kDefaultOmega);

}  // namespace qrws
