// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrws/coin.hpp"
#include "qrws/robustness.hpp"

namespace qrws {

/// Modified Hill function parameters: peak height b, plateau half-width kappa
/// and slope exponent eta.
struct HillParams {
    double b = 0.0;
    double kappa = 0.0;
    double eta = 0.0;
};

/// b kappa^eta / (|phi - pi|^eta + kappa^eta)
double hill_eval(double phi, double b, double kappa, double eta);
inline double hill_eval(double phi, const HillParams &p) { return hill_eval(phi, p.b, p.kappa, p.eta); }

/// Open phi interval (lo, hi) of samples used for a fit.
struct FitWindow {
    double lo = 0.0;
    double hi = kTwoPi;
};

/// (2 pi / 3, 4 pi / 3) for the constant-zeta law, (0, 2 pi) for the others.
FitWindow default_window(LawKind kind);

inline constexpr std::size_t kMinFitSamples = 10;
inline constexpr int kHillMaxIterations = 500;
inline constexpr double kHillStepTolerance = 1e-10;

struct HillFit {
    HillParams params;
    /// sqrt(sum of squared residuals / (N - 3)).
    double sigma = 0.0;
    FitWindow window;
    std::size_t samples = 0;
    int iterations = 0;
};

/// Unweighted least squares of the Hill function to the samples inside the
/// window. Starts from b = max p, kappa = half width at half maximum, eta = 2.
/// Throws FitFailure on non-convergence and ConfigError for < 10 samples.
HillFit hill_fit(std::span<const double> phi, std::span<const double> p, FitWindow window);
HillFit hill_fit(const ProbabilityCurve &curve, FitWindow window);

/// Which Hill parameter a secondary fit models as a function of coin size x:
///   b(x)     = c1 / x + c2
///   kappa(x) = c1 e^{c2 x} x^{c3} + c4
///   eta(x)   = c1 x^2 + c2 x + c3
enum class SecondaryParam { B, Kappa, Eta };

std::string_view secondary_param_name(SecondaryParam p) noexcept;
SecondaryParam parse_secondary_param(std::string_view name);
/// Number of coefficients of the form (2, 4 or 3).
int coefficient_count(SecondaryParam p) noexcept;

struct SecondaryCurve {
    SecondaryParam param = SecondaryParam::B;
    std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};
    std::array<bool, 4> frozen{false, false, false, false};
    double sigma = 0.0;

    double operator()(double x) const;
};

/// Least-squares fit of one form. Frozen coefficients keep their value from
/// `initial` (zeros by default).
SecondaryCurve fit_secondary_curve(SecondaryParam param, std::span<const double> x, std::span<const double> y,
                                   std::array<bool, 4> frozen = {false, false, false, false},
                                   std::array<double, 4> initial = {0.0, 0.0, 0.0, 0.0});

struct CoinSizeFit {
    int m = 0;
    HillFit fit;
};

struct SecondaryFit {
    std::string law;
    NeighborLevel level = NeighborLevel::W;
    SecondaryCurve b{SecondaryParam::B};
    SecondaryCurve kappa{SecondaryParam::Kappa};
    SecondaryCurve eta{SecondaryParam::Eta};
    int m_lo = 0;
    int m_hi = 0;
};

inline constexpr std::size_t kMinSecondarySizes = 5;
/// The kappa form is degenerate on some data (c1 and c4 trade off without
/// bound), so secondary fits also stop on a stalled cost.
inline constexpr int kSecondaryMaxIterations = 5000;
inline constexpr double kSecondaryCostTolerance = 1e-8;

/// Coin sizes over which a secondary fit should be evaluable.
inline constexpr int kSecondaryValidLo = 4;
inline constexpr int kSecondaryValidHi = 25;

/// Fits b, kappa and eta across coin sizes. kappa is fitted both with c2
/// free and with c2 frozen at zero; a candidate positive on
/// [kSecondaryValidLo, kSecondaryValidHi] is preferred, then the lower sigma.
SecondaryFit secondary_fit(std::span<const CoinSizeFit> fits, std::string_view law, NeighborLevel level);

/// Hill parameters predicted for coin size m (m >= 4). Throws
/// ExtrapolationError if kappa or eta is not positive there.
HillParams extrapolate(const SecondaryFit &secondary, int m);

/// Half-width at which the Hill function drops to omega of its peak:
/// kappa ((1 - omega) / omega)^(1 / eta).
double epsilon_tilde(double kappa, double eta, double omega = kDefaultOmega);

/// epsilon_tilde(a) / epsilon_tilde(b). The simplified form kappa_a / kappa_b
/// is refused for the linear laws, whose fits have no plateau.
double robustness_ratio(const HillParams &a, const HillParams &b, double omega, bool simplified, LawKind law);

}  // namespace qrws
