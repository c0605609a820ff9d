// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "qrws/coin.hpp"
#include "qrws/errors.hpp"

using namespace qrws;

namespace {

double unitarity_error(const Eigen::MatrixXcd &c) {
    const auto m = c.rows();
    return (c.adjoint() * c - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Coin, UnitaryForRandomPhases) {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double phi = angle(rng), zeta = angle(rng);
        const int m = 2 + trial % 11;
        worst = std::max(worst, unitarity_error(coin_matrix(phi, zeta, m)));
    }
    EXPECT_LT(worst, 1e-13);
}

TEST(Coin, MatchesIndependentFormula) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int m : {2, 3, 6, 9}) {
        const double phi = angle(rng), zeta = angle(rng);
        const Eigen::MatrixXcd diff = coin_matrix(phi, zeta, m) - oracle::dense_householder(m, phi, zeta);
        EXPECT_LT(diff.cwiseAbs().maxCoeff(), 1e-13) << "m=" << m;
    }
}

TEST(Coin, BlockApplyAgreesWithMatrix) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int m : {2, 5, 12}) {
        std::vector<Complex> block(m);
        for (auto &z : block) z = {g(rng), g(rng)};
        const double phi = 1.3, zeta = -0.4;
        const auto out = apply_householder_block(block, phi, zeta);
        const Eigen::VectorXcd ref = coin_matrix(phi, zeta, m) * Eigen::Map<const Eigen::VectorXcd>(block.data(), m);
        for (int i = 0; i < m; ++i) EXPECT_LT(std::abs(out[i] - ref(i)), 1e-13);
    }
}

TEST(Coin, ConjugationSymmetry) {
    for (double phi : {0.3, 1.7, 4.1}) {
        const double zeta = 2.0 * phi - 0.5;
        const Eigen::MatrixXcd a = coin_matrix(-phi, -zeta, 5);
        const Eigen::MatrixXcd b = coin_matrix(phi, zeta, 5).conjugate();
        EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(Coin, GroverSpecialCases) {
    const Eigen::MatrixXcd swap = coin_matrix(kPi, kPi, 2);
    EXPECT_NEAR(std::abs(swap(0, 0)), 0.0, 1e-15);
    EXPECT_NEAR(swap(0, 1).real(), 1.0, 1e-15);
    EXPECT_NEAR(swap(1, 0).real(), 1.0, 1e-15);
    EXPECT_LT((coin_matrix(0.0, 0.0, 4) - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-15);

    // Grover coin 2|chi><chi| - I: chi is fixed, vectors orthogonal to chi flip.
    const int m = 6;
    std::vector<Complex> chi(m, 1.0 / std::sqrt(6.0));
    const auto fixed = apply_householder_block(chi, kPi, kPi);
    for (int i = 0; i < m; ++i) EXPECT_NEAR(std::abs(fixed[i] - chi[i]), 0.0, 1e-15);
    std::vector<Complex> perp(m, 0.0);
    perp[0] = 1.0;
    perp[1] = -1.0;
    const auto flipped = apply_householder_block(perp, kPi, kPi);
    for (int i = 0; i < m; ++i) EXPECT_NEAR(std::abs(flipped[i] + perp[i]), 0.0, 1e-15);
}

TEST(Coin, SmallSizeRejected) { EXPECT_THROW(coin_matrix(1.0, 1.0, 1), InvalidDimension); }

TEST(DependenceLaw, Examples) {
    const auto c = DependenceLaw::parse("const");
    const auto lin = DependenceLaw::parse("linear");
    const auto nl = DependenceLaw::parse("nl-fixed");
    EXPECT_DOUBLE_EQ(zeta_of_phi(c, 0.3, 6), kPi);
    EXPECT_NEAR(zeta_of_phi(lin, kPi, 6), kPi, 1e-15);
    EXPECT_NEAR(zeta_of_phi(nl, kPi, 6), kPi, 1e-15);
    const double phi = 1.1;
    EXPECT_NEAR(zeta_of_phi(lin, phi, 6), -2 * phi + 3 * kPi, 1e-15);
    EXPECT_NEAR(zeta_of_phi(nl, phi, 6), -2 * phi + 3 * kPi - std::sin(2 * phi) / (2 * kPi), 1e-15);
    const auto ml = DependenceLaw::parse("nl-ml", {{6, 0.07}});
    EXPECT_NEAR(zeta_of_phi(ml, phi, 6), -2 * phi + 3 * kPi + 0.07 * std::sin(2 * phi), 1e-15);
}

TEST(DependenceLaw, MissingAlphaIsConfigError) {
    const auto ml = DependenceLaw::parse("nl-ml", {{6, 0.07}});
    EXPECT_THROW(zeta_of_phi(ml, 1.0, 7), ConfigError);
    EXPECT_THROW(DependenceLaw::parse("quadratic"), ConfigError);
    EXPECT_THROW(zeta_of_phi(DependenceLaw::parse("linear"), 0.0, 6), DomainError);
}

TEST(DependenceLaw, MirrorRelation) {
    // zeta(2 pi - phi) = 2 pi - zeta(phi) (mod 2 pi) for every law.
    const auto ml = DependenceLaw::parse("nl-ml", {{5, -0.11}});
    for (const auto &law : {DependenceLaw::parse("const"), DependenceLaw::parse("linear"),
                            DependenceLaw::parse("nl-fixed"), ml}) {
        for (double phi : {0.2, 1.0, 2.5, 3.0}) {
            const double lhs = zeta_of_phi(law, kTwoPi - phi, 5);
            const double rhs = kTwoPi - zeta_of_phi(law, phi, 5);
            EXPECT_NEAR(std::remainder(lhs - rhs, kTwoPi), 0.0, 1e-12) << law.name();
        }
    }
}

TEST(DependenceLaw, AlphaTableParsing) {
    const auto a = parse_alpha_table(R"({"4": 0.1, "5": -0.2})");
    EXPECT_DOUBLE_EQ(a.at(4), 0.1);
    EXPECT_DOUBLE_EQ(a.at(5), -0.2);
    const auto b = parse_alpha_table(R"({"alpha_ml": {"6": 0.3}})");
    EXPECT_DOUBLE_EQ(b.at(6), 0.3);
    EXPECT_THROW(parse_alpha_table("[1, 2]"), ConfigError);
    EXPECT_THROW(load_alpha_table("/nonexistent/alpha.json"), MissingArtifact);
}
