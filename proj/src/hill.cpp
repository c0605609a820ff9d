// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrws/hill.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "qrws/errors.hpp"
#include "qrws/least_squares.hpp"

namespace qrws {

double hill_eval(double phi, double b, double kappa, double eta) {
    const double x = std::abs(phi - kPi);
    if (x == 0.0) return b;
    return b / (1.0 + std::pow(x / kappa, eta));
}

FitWindow default_window(LawKind kind) {
    if (kind == LawKind::ConstZeta) return {2.0 * kPi / 3.0, 4.0 * kPi / 3.0};
    return {0.0, kTwoPi};
}

namespace {

// Half the width of the contiguous run of samples at or above half maximum
// around the peak.
double half_width_at_half_max(const std::vector<double> &x, const std::vector<double> &y, std::size_t peak) {
    const double half = 0.5 * y[peak];
    std::size_t lo = peak;
    std::size_t hi = peak;
    while (lo > 0 && y[lo - 1] >= half) --lo;
    while (hi + 1 < y.size() && y[hi + 1] >= half) ++hi;
    double w = 0.5 * (x[hi] - x[lo]);
    if (w <= 0.0) {
        w = x.size() > 1 ? (x.back() - x.front()) / static_cast<double>(x.size() - 1) : 1.0;
    }
    return w;
}

}  // namespace

HillFit hill_fit(std::span<const double> phi, std::span<const double> p, FitWindow window) {
    if (phi.size() != p.size()) {
        throw InvariantError("hill_fit: phi and p differ in length");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i] > window.lo && phi[i] < window.hi) {
            xs.push_back(phi[i]);
            ys.push_back(p[i]);
        }
    }
    if (xs.size() < kMinFitSamples) {
        throw ConfigError(fmt::format("hill_fit needs at least {} samples in ({}, {}), got {}", kMinFitSamples,
                                      window.lo, window.hi, xs.size()));
    }
    const auto n = static_cast<Eigen::Index>(xs.size());
    const auto peak = static_cast<std::size_t>(std::max_element(ys.begin(), ys.end()) - ys.begin());

    LeastSquaresProblem problem;
    problem.residual_count = n;
    problem.evaluate = [&](const Eigen::VectorXd &t, Eigen::VectorXd &r, Eigen::MatrixXd *jac) {
        const double b = t(0), kappa = t(1), eta = t(2);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double x = std::abs(xs[i] - kPi);
            double s = 1.0;  // 1 / (1 + (x / kappa)^eta)
            double log_ratio = 0.0;
            if (x > 0.0) {
                log_ratio = std::log(x / kappa);
                s = 1.0 / (1.0 + std::exp(eta * log_ratio));
            }
            r(i) = b * s - ys[i];
            if (jac) {
                const double ts2 = s * (1.0 - s);  // t / (1 + t)^2
                (*jac)(i, 0) = s;
                (*jac)(i, 1) = b * ts2 * eta / kappa;
                (*jac)(i, 2) = -b * ts2 * log_ratio;
            }
        }
    };
    problem.feasible = [](const Eigen::VectorXd &t) { return t(1) > 0.0 && t(2) > 0.0 && std::isfinite(t(0)); };

    Eigen::VectorXd start(3);
    start << ys[peak], half_width_at_half_max(xs, ys, peak), 2.0;
    LeastSquaresOptions options;
    options.max_iterations = kHillMaxIterations;
    options.step_tolerance = kHillStepTolerance;
    const LeastSquaresSummary s = levenberg_marquardt(problem, start, options);
    if (!s.converged) {
        throw FitFailure(fmt::format("Hill fit did not converge ({}): b={}, kappa={}, eta={}, cost={}, start=({}, {}, {})",
                                     s.message, s.x(0), s.x(1), s.x(2), s.cost, start(0), start(1), start(2)));
    }
    HillFit fit;
    fit.params = {s.x(0), s.x(1), s.x(2)};
    fit.sigma = std::sqrt(s.cost / static_cast<double>(n - 3));
    fit.window = window;
    fit.samples = xs.size();
    fit.iterations = s.iterations;
    return fit;
}

HillFit hill_fit(const ProbabilityCurve &curve, FitWindow window) { return hill_fit(curve.phi, curve.p, window); }

std::string_view secondary_param_name(SecondaryParam p) noexcept {
    switch (p) {
        case SecondaryParam::B:
            return "b";
        case SecondaryParam::Kappa:
            return "kappa";
        case SecondaryParam::Eta:
            return "eta";
    }
    return "b";
}

SecondaryParam parse_secondary_param(std::string_view name) {
    if (name == "b") return SecondaryParam::B;
    if (name == "kappa" || name == "k") return SecondaryParam::Kappa;
    if (name == "eta" || name == "n") return SecondaryParam::Eta;
    throw SchemaError(fmt::format("unknown secondary-fit parameter '{}'", name));
}

int coefficient_count(SecondaryParam p) noexcept {
    switch (p) {
        case SecondaryParam::B:
            return 2;
        case SecondaryParam::Kappa:
            return 4;
        case SecondaryParam::Eta:
            return 3;
    }
    return 0;
}

double SecondaryCurve::operator()(double x) const {
    switch (param) {
        case SecondaryParam::B:
            return c[0] / x + c[1];
        case SecondaryParam::Kappa:
            return c[0] * std::exp(c[1] * x) * std::pow(x, c[2]) + c[3];
        case SecondaryParam::Eta:
            return c[0] * x * x + c[1] * x + c[2];
    }
    return 0.0;
}

namespace {

void secondary_row(SecondaryParam param, const Eigen::VectorXd &c, double x, double &value, double *grad) {
    switch (param) {
        case SecondaryParam::B:
            value = c(0) / x + c(1);
            if (grad) {
                grad[0] = 1.0 / x;
                grad[1] = 1.0;
            }
            return;
        case SecondaryParam::Kappa: {
            const double base = std::exp(c(1) * x) * std::pow(x, c(2));
            value = c(0) * base + c(3);
            if (grad) {
                grad[0] = base;
                grad[1] = c(0) * x * base;
                grad[2] = c(0) * std::log(x) * base;
                grad[3] = 1.0;
            }
            return;
        }
        case SecondaryParam::Eta:
            value = c(0) * x * x + c(1) * x + c(2);
            if (grad) {
                grad[0] = x * x;
                grad[1] = x;
                grad[2] = 1.0;
            }
            return;
    }
}

// Power-law start for kappa: log y = log c1 + c3 log x.
void kappa_start(std::span<const double> x, std::span<const double> y, std::array<double, 4> &c,
                 const std::array<bool, 4> &frozen) {
    const bool positive = std::all_of(y.begin(), y.end(), [](double v) { return v > 0.0; });
    if (!positive) {
        double mean = 0.0;
        for (double v : y) mean += v;
        if (!frozen[0]) c[0] = mean / static_cast<double>(y.size());
        return;
    }
    Eigen::MatrixXd a(static_cast<Eigen::Index>(x.size()), 2);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        a(static_cast<Eigen::Index>(i), 0) = 1.0;
        a(static_cast<Eigen::Index>(i), 1) = std::log(x[i]);
        rhs(static_cast<Eigen::Index>(i)) = std::log(y[i]);
    }
    const Eigen::VectorXd sol = a.colPivHouseholderQr().solve(rhs);
    if (!frozen[0]) c[0] = std::exp(sol(0));
    if (!frozen[2]) c[2] = sol(1);
}

}  // namespace

SecondaryCurve fit_secondary_curve(SecondaryParam param, std::span<const double> x, std::span<const double> y,
                                   std::array<bool, 4> frozen, std::array<double, 4> initial) {
    if (x.size() != y.size()) {
        throw InvariantError("secondary fit: x and y differ in length");
    }
    const int count = coefficient_count(param);
    int free_count = 0;
    for (int i = 0; i < count; ++i) free_count += frozen[i] ? 0 : 1;
    if (x.size() < static_cast<std::size_t>(free_count) + 1) {
        throw ConfigError(fmt::format("secondary fit of {} needs more than {} points, got {}",
                                      secondary_param_name(param), free_count, x.size()));
    }
    for (double v : x) {
        if (!(v > 0.0)) throw DomainError("secondary fit abscissae must be positive coin sizes");
    }

    std::array<double, 4> c0 = initial;
    if (param == SecondaryParam::Kappa && initial == std::array<double, 4>{0.0, 0.0, 0.0, 0.0}) {
        kappa_start(x, y, c0, frozen);
    }

    const auto n = static_cast<Eigen::Index>(x.size());
    LeastSquaresProblem problem;
    problem.residual_count = n;
    problem.evaluate = [&](const Eigen::VectorXd &c, Eigen::VectorXd &r, Eigen::MatrixXd *jac) {
        double grad[4] = {0.0, 0.0, 0.0, 0.0};
        for (Eigen::Index i = 0; i < n; ++i) {
            double value = 0.0;
            secondary_row(param, c, x[i], value, jac ? grad : nullptr);
            r(i) = value - y[i];
            if (jac) {
                for (int k = 0; k < count; ++k) (*jac)(i, k) = grad[k];
            }
        }
    };
    Eigen::VectorXd start(count);
    for (int k = 0; k < count; ++k) start(k) = c0[k];
    LeastSquaresOptions options;
    options.frozen.assign(frozen.begin(), frozen.begin() + count);
    options.max_iterations = kSecondaryMaxIterations;
    options.step_tolerance = kHillStepTolerance;
    options.cost_tolerance = kSecondaryCostTolerance;
    const LeastSquaresSummary s = levenberg_marquardt(problem, start, options);
    if (!s.converged) {
        throw FitFailure(fmt::format("secondary fit of {} did not converge: {}", secondary_param_name(param), s.message));
    }
    SecondaryCurve out;
    out.param = param;
    for (int k = 0; k < count; ++k) out.c[k] = s.x(k);
    out.frozen = frozen;
    for (int k = count; k < 4; ++k) out.frozen[k] = false;
    out.sigma = std::sqrt(s.cost / static_cast<double>(static_cast<int>(x.size()) - free_count));
    return out;
}

SecondaryFit secondary_fit(std::span<const CoinSizeFit> fits, std::string_view law, NeighborLevel level) {
    std::vector<CoinSizeFit> sorted(fits.begin(), fits.end());
    std::sort(sorted.begin(), sorted.end(), [](const CoinSizeFit &a, const CoinSizeFit &b) { return a.m < b.m; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].m == sorted[i - 1].m) {
            throw ConfigError(fmt::format("secondary fit got two primary fits for m={}", sorted[i].m));
        }
    }
    if (sorted.size() < kMinSecondarySizes) {
        throw ConfigError(
            fmt::format("secondary fit needs at least {} coin sizes, got {}", kMinSecondarySizes, sorted.size()));
    }
    std::vector<double> x, b, kappa, eta;
    for (const CoinSizeFit &f : sorted) {
        x.push_back(f.m);
        b.push_back(f.fit.params.b);
        kappa.push_back(f.fit.params.kappa);
        eta.push_back(f.fit.params.eta);
    }

    SecondaryFit out;
    out.law = std::string(law);
    out.level = level;
    out.m_lo = sorted.front().m;
    out.m_hi = sorted.back().m;
    out.b = fit_secondary_curve(SecondaryParam::B, x, b);
    out.eta = fit_secondary_curve(SecondaryParam::Eta, x, eta);

    // kappa: exponential-power form with c2 free, or a pure power law with
    // c2 frozen at zero; keep whichever has the lower sigma.
    std::vector<SecondaryCurve> candidates;
    std::string failures;
    for (bool freeze_c2 : {false, true}) {
        try {
            candidates.push_back(
                fit_secondary_curve(SecondaryParam::Kappa, x, kappa, {false, freeze_c2, false, false}));
        } catch (const FitFailure &e) {
            failures += std::string(failures.empty() ? "" : "; ") + e.what();
        }
    }
    if (candidates.empty()) {
        throw FitFailure(fmt::format("secondary fit of kappa failed for law {} level {}: {}", law, level_name(level),
                                     failures));
    }
    // A candidate that stays positive across the validity range beats one
    // that does not; sigma decides otherwise.
    auto positive = [](const SecondaryCurve &c) {
        for (int m = kSecondaryValidLo; m <= kSecondaryValidHi; ++m) {
            if (!(c(m) > 0.0)) return false;
        }
        return true;
    };
    out.kappa = *std::min_element(candidates.begin(), candidates.end(),
                                  [&](const SecondaryCurve &a, const SecondaryCurve &b) {
                                      const bool pa = positive(a), pb = positive(b);
                                      return pa != pb ? pa : a.sigma < b.sigma;
                                  });
    return out;
}

HillParams extrapolate(const SecondaryFit &secondary, int m) {
    if (m < 4) {
        throw DomainError(fmt::format("extrapolation needs m >= 4, got {}", m));
    }
    const double x = m;
    HillParams p{secondary.b(x), secondary.kappa(x), secondary.eta(x)};
    if (!(p.kappa > 0.0) || !(p.eta > 0.0)) {
        throw ExtrapolationError(fmt::format(
            "secondary fit for law {} level {} is outside its validity at m={}: kappa={}, eta={}", secondary.law,
            level_name(secondary.level), m, p.kappa, p.eta));
    }
    return p;
}

double epsilon_tilde(double kappa, double eta, double omega) {
    if (!(kappa > 0.0) || !(eta > 0.0)) {
        throw DomainError(fmt::format("epsilon_tilde needs kappa > 0 and eta > 0, got {} and {}", kappa, eta));
    }
    if (!(omega > 0.0 && omega < 1.0)) {
        throw DomainError(fmt::format("omega must lie in (0, 1), got {}", omega));
    }
    return kappa * std::pow((1.0 - omega) / omega, 1.0 / eta);
}

double robustness_ratio(const HillParams &a, const HillParams &b, double omega, bool simplified, LawKind law) {
    if (!(a.kappa > 0.0 && a.eta > 0.0 && b.kappa > 0.0 && b.eta > 0.0)) {
        throw DomainError("robustness_ratio needs positive kappa and eta in both parameter sets");
    }
    if (simplified) {
        if (law == LawKind::ConstZeta || law == LawKind::Linear) {
            throw ConfigError(fmt::format(
                "the kappa-ratio shortcut is not valid for law {}: its Hill fits have no plateau", law_name(law)));
        }
        return a.kappa / b.kappa;
    }
    if (!(omega > 0.0 && omega < 1.0)) {
        throw DomainError(fmt::format("omega must lie in (0, 1), got {}", omega));
    }
    const double exponent = (b.eta - a.eta) / (a.eta * b.eta);
    return std::pow((1.0 - omega) / omega, exponent) * a.kappa / b.kappa;
}

}  // namespace qrws
