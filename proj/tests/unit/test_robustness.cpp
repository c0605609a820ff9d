// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "qrws/errors.hpp"
#include "qrws/robustness.hpp"

using namespace qrws;

namespace {

ProbabilityCurve curve_from(std::vector<double> phi, std::vector<double> p) {
    ProbabilityCurve c;
    c.m = 4;
    c.law = "const";
    c.phi = std::move(phi);
    c.p = std::move(p);
    return c;
}

}  // namespace

TEST(PhiGrid, CenteredAndSymmetric) {
    const auto g = phi_grid(0.005);
    EXPECT_EQ(g.size(), 1257u);
    EXPECT_GT(g.front(), 0.0);
    EXPECT_LT(g.back(), kTwoPi);
    EXPECT_EQ(g[g.size() / 2], kPi);
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(g[i] + g[g.size() - 1 - i], kTwoPi, 1e-12);
}

TEST(Epsilon, BoxCurve) {
    const auto g = phi_grid(0.005);
    std::vector<double> p;
    for (double phi : g) p.push_back(std::abs(phi - kPi) < 0.3 ? 1.0 : 0.0);
    const auto r = robustness_epsilon(g, p, 0.9);
    EXPECT_NEAR(r.epsilon, 0.3, 0.005);
    EXPECT_EQ(r.phi_max, kPi);
    EXPECT_FALSE(r.edge_bounded);
}

TEST(Epsilon, ConstantCurveHitsDomainEdge) {
    const auto g = phi_grid(0.01);
    std::vector<double> p(g.size(), 0.25);
    const auto r = robustness_epsilon(g, p, 0.9);
    EXPECT_EQ(r.phi_max, kPi);
    EXPECT_TRUE(r.edge_bounded);
    EXPECT_DOUBLE_EQ(r.epsilon, std::min(r.phi_max, kTwoPi - r.phi_max));
}

TEST(Epsilon, OffCenterPeakAndValidation) {
    const auto g = phi_grid(0.01);
    std::vector<double> p;
    for (double phi : g) p.push_back(std::exp(-(phi - 1.0) * (phi - 1.0)));
    const auto r = robustness_epsilon(g, p, 0.9);
    EXPECT_NEAR(r.phi_max, 1.0, 0.01);
    // exp(-e^2) = 0.9 at e = sqrt(ln(1/0.9)).
    EXPECT_NEAR(r.epsilon, std::sqrt(std::log(1 / 0.9)), 0.011);
    EXPECT_THROW(robustness_epsilon(std::vector<double>{}, std::vector<double>{}, 0.9), Error);
    EXPECT_THROW(robustness_epsilon(g, p, 1.5), ConfigError);
}

TEST(Epsilon, MonotoneInOmega) {
    const auto g = phi_grid(0.005);
    std::vector<double> p;
    for (double phi : g) p.push_back(0.4 / (1 + std::pow(std::abs(phi - kPi) / 0.6, 3.0)));
    double last = 1e9;
    for (double omega = 0.05; omega < 1.0; omega += 0.05) {
        const double e = robustness_epsilon(g, p, omega).epsilon;
        EXPECT_LE(e, last);
        last = e;
    }
}

TEST(Epsilon, GridRefinementStable) {
    const DependenceLaw law = DependenceLaw::parse("linear");
    const auto coarse = sweep_phi(4, law, 2, phi_grid(0.01));
    const auto fine = sweep_phi(4, law, 2, phi_grid(0.005));
    for (auto level : kAllLevels) {
        const double a = robustness_epsilon(coarse.curve(level)).epsilon;
        const double b = robustness_epsilon(fine.curve(level)).epsilon;
        EXPECT_LE(std::abs(a - b), 0.01 + 1e-12) << level_name(level);
    }
}

TEST(Sweep, GroverPointAndMirrorSymmetry) {
    const auto grid = phi_grid(0.005);
    const auto s = sweep_phi(6, DependenceLaw::parse("const"), 2, grid);
    EXPECT_NEAR(s.p_w[grid.size() / 2], 0.411765, 1e-4);
    for (const char *name : {"const", "linear", "nl-fixed"}) {
        const auto t = sweep_phi(4, DependenceLaw::parse(name), 2, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const std::size_t k = grid.size() - 1 - i;
            ASSERT_NEAR(t.p_w[i], t.p_w[k], 1e-10) << name;
            ASSERT_NEAR(t.p_s[i], t.p_s[k], 1e-10) << name;
        }
    }
}

TEST(Sweep, LevelsOrdered) {
    const auto grid = phi_grid(0.05);
    for (int m = 4; m <= 8; ++m) {
        for (const char *name : {"const", "linear", "nl-fixed"}) {
            const auto s = sweep_phi(m, DependenceLaw::parse(name), 2, grid);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                ASSERT_LE(s.p_w[i], s.p_f[i] + 1e-15);
                ASSERT_LE(s.p_f[i], s.p_s[i] + 1e-15);
            }
        }
    }
}

TEST(Sweep, NearZeroPhiApproachesUniformShellRatio) {
    const std::vector<double> grid{0.01};
    const auto s = sweep_phi(4, DependenceLaw::parse("linear"), 2, grid);
    // An almost phase-only coin leaves the distribution almost uniform, so
    // P_S / P_W tends to 1 + 4 + 6.
    EXPECT_NEAR(s.p_s[0] / s.p_w[0], 11.0, 0.5);
}

TEST(Heatmap, KnownPoints) {
    const std::vector<double> phi{0.0, kPi}, zeta{-kPi, 0.5, kPi};
    const Heatmap h = sweep_heatmap(6, phi, zeta, 2);
    for (std::size_t k = 0; k < zeta.size(); ++k) EXPECT_NEAR(h.at(0, k), 1.0 / 64, 1e-10);
    EXPECT_NEAR(h.at(1, 2), 0.411765, 1e-4);
    EXPECT_NEAR(h.at(1, 0), h.at(1, 2), 0.02 * h.at(1, 2));
}

TEST(Lambda, NormalizationAndSymmetry) {
    const auto grid = phi_grid(0.005);
    const auto s = sweep_phi(6, DependenceLaw::parse("linear"), 2, grid);
    const auto c = lambda_curves(s.curve(NeighborLevel::W), s.curve(NeighborLevel::F), s.curve(NeighborLevel::S));
    const std::size_t mid = grid.size() / 2;
    EXPECT_NEAR(c.lambda1[mid], 1.0, 1e-12);
    EXPECT_NEAR(c.lambda2[mid], 1.0, 1e-12);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::size_t k = grid.size() - 1 - i;
        if (std::isnan(c.lambda1[i])) continue;
        ASSERT_NEAR(c.lambda1[i], c.lambda1[k], 1e-9);
        ASSERT_NEAR(c.lambda2[i], c.lambda2[k], 1e-9);
    }
    const auto r = lambda_report(s);
    EXPECT_LT(std::abs(r.capital_lambda1), 0.05);
}

TEST(Lambda, CapitalLambdaOfConstantIsZero) {
    const auto g = phi_grid(0.005);
    const std::vector<double> ones(g.size(), 1.0);
    EXPECT_NEAR(capital_lambda(g, ones, 0.4), 0.0, 1e-12);
    EXPECT_THROW(capital_lambda(g, ones, 0.001), InsufficientResolution);
}

TEST(Lambda, DegenerateNormalization) {
    const auto g = phi_grid(0.5);
    std::vector<double> zero(g.size(), 0.0), half(g.size(), 0.5);
    auto w = curve_from(g, zero);
    w.level = NeighborLevel::W;
    auto f = curve_from(g, half);
    f.level = NeighborLevel::F;
    auto s = curve_from(g, half);
    s.level = NeighborLevel::S;
    EXPECT_THROW(lambda_curves(w, f, s), DegenerateNormalization);
}
