// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qrws/errors.hpp"
#include "qrws/hill.hpp"

using namespace qrws;

namespace {

std::vector<double> sample_hill(const std::vector<double> &grid, const HillParams &p) {
    std::vector<double> out;
    out.reserve(grid.size());
    for (double phi : grid) out.push_back(hill_eval(phi, p));
    return out;
}

}  // namespace

TEST(HillEval, ClosedForms) {
    EXPECT_DOUBLE_EQ(hill_eval(kPi, 0.42, 0.7, 3.0), 0.42);
    EXPECT_NEAR(hill_eval(kPi + 0.7, 0.42, 0.7, 3.0), 0.21, 1e-15);
    EXPECT_NEAR(hill_eval(kPi + 2.0, 1.0, 1.0, 2.0), 0.2, 1e-15);
    for (double d : {0.1, 0.9, 2.5}) EXPECT_NEAR(hill_eval(kPi + d, 0.3, 0.5, 4.0), hill_eval(kPi - d, 0.3, 0.5, 4.0), 1e-15);
}

TEST(HillFit, RecoversSyntheticCurve) {
    const auto grid = phi_grid();
    const HillParams truth{0.45, 0.8, 3.0};
    const auto fit = hill_fit(grid, sample_hill(grid, truth), FitWindow{});
    EXPECT_NEAR(fit.params.b, truth.b, 1e-6);
    EXPECT_NEAR(fit.params.kappa, truth.kappa, 1e-6);
    EXPECT_NEAR(fit.params.eta, truth.eta, 1e-6);
    EXPECT_LT(fit.sigma, 1e-9);
    EXPECT_EQ(fit.samples, grid.size());
}

TEST(HillFit, RoundTripRandomParameters) {
    const auto grid = phi_grid();
    std::mt19937_64 rng(20261014);
    std::uniform_real_distribution<double> b(0.1, 1.0), kappa(0.1, 1.5), eta(1.0, 12.0);
    for (int trial = 0; trial < 100; ++trial) {
        const HillParams truth{b(rng), kappa(rng), eta(rng)};
        const auto fit = hill_fit(grid, sample_hill(grid, truth), FitWindow{});
        ASSERT_NEAR(fit.params.b, truth.b, 1e-6) << trial;
        ASSERT_NEAR(fit.params.kappa, truth.kappa, 1e-6) << trial;
        ASSERT_NEAR(fit.params.eta, truth.eta, 1e-6) << trial;
    }
}

TEST(HillFit, TooFewSamples) {
    const auto grid = phi_grid(0.5);
    const auto p = sample_hill(grid, {0.4, 0.5, 2.0});
    EXPECT_THROW(hill_fit(grid, p, FitWindow{kPi - 1.0, kPi + 1.0}), ConfigError);
}

TEST(HillFit, SimulatedCurves) {
    const auto grid = phi_grid();
    const auto nl = sweep_phi(6, DependenceLaw::parse("nl-fixed"), 2, grid);
    const auto nl_fit = hill_fit(nl.curve(NeighborLevel::W), default_window(LawKind::NonlinearFixed));
    EXPECT_LT(nl_fit.sigma, 0.02);

    const auto c = sweep_phi(6, DependenceLaw::parse("const"), 2, grid);
    const auto curve = c.curve(NeighborLevel::W);
    const auto c_fit = hill_fit(curve, default_window(LawKind::ConstZeta));
    EXPECT_NEAR(c_fit.params.b, *std::max_element(curve.p.begin(), curve.p.end()), 0.02);

    // Narrowing the window around the peak never makes the residual worse.
    const auto narrow = hill_fit(curve, FitWindow{kPi - 0.6, kPi + 0.6});
    EXPECT_LE(narrow.sigma, c_fit.sigma + 1e-12);
}

TEST(HillFit, EpsilonAgreesWithCurveEpsilon) {
    const auto grid = phi_grid();
    for (const HillParams p : {HillParams{0.4, 0.3, 2.0}, HillParams{0.9, 0.8, 8.0}, HillParams{0.2, 1.2, 20.0}}) {
        const auto curve = sample_hill(grid, p);
        const double e = robustness_epsilon(grid, curve, 0.9).epsilon;
        EXPECT_NEAR(e, epsilon_tilde(p.kappa, p.eta, 0.9), kDefaultPhiStep);
    }
}

TEST(Secondary, TableCoefficientEvaluation) {
    // b(x) = c1 / x + c2 and kappa(x) = c1 e^{c2 x} x^{c3} + c4 at x = 6.
    SecondaryCurve b{SecondaryParam::B, {-0.285537, 0.452847, 0.0, 0.0}};
    EXPECT_NEAR(b(6.0), -0.285537 / 6.0 + 0.452847, 1e-15);
    EXPECT_NEAR(b(6.0), 0.4052575, 1e-7);
    SecondaryCurve k{SecondaryParam::Kappa, {1.07763, -0.531884, 1.0, 0.0}};
    EXPECT_NEAR(k(6.0), 1.07763 * std::exp(-0.531884 * 6.0) * 6.0, 1e-15);
    EXPECT_NEAR(k(6.0), 0.2658614, 1e-7);
    SecondaryCurve eta{SecondaryParam::Eta, {0.5, -1.0, 2.0, 0.0}};
    EXPECT_DOUBLE_EQ(eta(4.0), 8.0 - 4.0 + 2.0);
}

TEST(Secondary, RecoversSyntheticCoefficients) {
    std::vector<double> x, y;
    for (int m = 4; m <= 10; ++m) {
        x.push_back(m);
        y.push_back(-0.3 / m + 0.45);
    }
    const auto b = fit_secondary_curve(SecondaryParam::B, x, y);
    EXPECT_NEAR(b.c[0], -0.3, 1e-8);
    EXPECT_NEAR(b.c[1], 0.45, 1e-8);

    std::vector<double> ky;
    for (double v : x) ky.push_back(0.9 * std::pow(v, -1.2) + 0.01);
    const auto k = fit_secondary_curve(SecondaryParam::Kappa, x, ky, {false, true, false, false});
    EXPECT_EQ(k.c[1], 0.0);
    EXPECT_NEAR(k.c[0], 0.9, 1e-6);
    EXPECT_NEAR(k.c[2], -1.2, 1e-6);
    EXPECT_NEAR(k.c[3], 0.01, 1e-6);

    std::vector<double> ey;
    for (double v : x) ey.push_back(0.05 * v * v - 0.2 * v + 3.0);
    const auto e = fit_secondary_curve(SecondaryParam::Eta, x, ey);
    EXPECT_NEAR(e.c[0], 0.05, 1e-8);
    EXPECT_NEAR(e.c[1], -0.2, 1e-8);
    EXPECT_NEAR(e.c[2], 3.0, 1e-8);
}

TEST(Secondary, NeedsFiveSizesAndExtrapolates) {
    std::vector<CoinSizeFit> fits;
    for (int m = 4; m <= 8; ++m) {
        HillFit f;
        f.params = {-0.3 / m + 0.45, 2.0 * std::pow(m, -1.0), 0.1 * m * m + 1.0};
        fits.push_back({m, f});
    }
    const auto sec = secondary_fit(fits, "const", NeighborLevel::W);
    for (const auto &f : fits) {
        const auto p = extrapolate(sec, f.m);
        EXPECT_NEAR(p.b, sec.b(f.m), 1e-15);
        EXPECT_NEAR(p.b, f.fit.params.b, 1e-7);
        EXPECT_NEAR(p.kappa, f.fit.params.kappa, 1e-5);
        EXPECT_NEAR(p.eta, f.fit.params.eta, 1e-6);
    }
    EXPECT_THROW(extrapolate(sec, 3), DomainError);
    fits.pop_back();
    EXPECT_THROW(secondary_fit(fits, "const", NeighborLevel::W), Error);
}

TEST(Secondary, OutOfValidity) {
    SecondaryFit sec;
    sec.law = "linear";
    sec.b = {SecondaryParam::B, {0.0, 0.5, 0.0, 0.0}};
    sec.kappa = {SecondaryParam::Kappa, {1.0, 0.0, 1.0, -20.0}};
    sec.eta = {SecondaryParam::Eta, {0.0, 0.0, 2.0, 0.0}};
    EXPECT_NO_THROW(extrapolate(sec, 25));
    EXPECT_THROW(extrapolate(sec, 12), ExtrapolationError);
}

TEST(EpsilonTilde, ClosedForms) {
    EXPECT_NEAR(epsilon_tilde(1.0, 2.0, 0.9), 1.0 / 3.0, 1e-15);
    for (double eta : {0.5, 2.0, 7.0}) EXPECT_NEAR(epsilon_tilde(0.8, eta, 0.5), 0.8, 1e-15);
    const double square = epsilon_tilde(1.0, 100.0, 0.9);
    EXPECT_NEAR(square, std::pow(1.0 / 9.0, 0.01), 1e-15);
    EXPECT_LT(1.0 - square, 0.03);
    EXPECT_LT(epsilon_tilde(0.5, 3.0, 0.9), epsilon_tilde(0.6, 3.0, 0.9));
    EXPECT_GT(epsilon_tilde(0.5, 3.0, 0.8), epsilon_tilde(0.5, 3.0, 0.9));
    EXPECT_THROW(epsilon_tilde(0.0, 2.0, 0.9), DomainError);
}

TEST(RobustnessRatio, Forms) {
    const HillParams a{0.5, 0.6, 20.0}, b{0.5, 0.4, 20.0}, c{0.5, 0.4, 10.0};
    EXPECT_DOUBLE_EQ(robustness_ratio(a, a, 0.9, false, LawKind::Linear), 1.0);
    EXPECT_NEAR(robustness_ratio(a, b, 0.9, false, LawKind::ConstZeta), 1.5, 1e-15);
    EXPECT_NEAR(robustness_ratio(a, b, 0.9, true, LawKind::NonlinearFixed), 1.5, 1e-15);
    const double full = robustness_ratio(a, c, 0.9, false, LawKind::NonlinearFixed);
    const double simple = robustness_ratio(a, c, 0.9, true, LawKind::NonlinearFixed);
    EXPECT_NEAR(full / simple, std::pow(9.0, 0.05), 1e-14);
    EXPECT_NEAR(full / simple, 1.1161232, 1e-7);
    EXPECT_NEAR(full, epsilon_tilde(a.kappa, a.eta, 0.9) / epsilon_tilde(c.kappa, c.eta, 0.9), 1e-14);
    EXPECT_THROW(robustness_ratio(a, b, 0.9, true, LawKind::ConstZeta), ConfigError);
    EXPECT_THROW(robustness_ratio(a, b, 0.9, true, LawKind::Linear), ConfigError);
}
