// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "qrws/errors.hpp"
#include "qrws/neighborhood.hpp"

using namespace qrws;

TEST(Neighborhood, Counts) {
    EXPECT_EQ(neighbor_count(6, 1), 6u);
    EXPECT_EQ(neighbor_count(6, 2), 15u);
    EXPECT_EQ(neighbor_count(9, 0), 1u);
    for (int m = 2; m <= 16; ++m) {
        std::uint64_t total = 0;
        for (int o = 0; o <= m; ++o) total += neighbor_count(m, o);
        EXPECT_EQ(total, std::uint64_t{1} << m);
    }
    EXPECT_THROW(neighbor_count(4, 5), DomainError);
    EXPECT_THROW(neighbor_count(4, -1), DomainError);
}

TEST(Neighborhood, FirstNeighborsOfTwo) {
    EXPECT_EQ(hamming_neighbors(2, 6, 1), (std::vector<Node>{0, 3, 6, 10, 18, 34}));
    EXPECT_EQ(hamming_neighbors(0, 3, 3), (std::vector<Node>{7}));
    EXPECT_EQ(hamming_neighbors(13, 5, 0), (std::vector<Node>{13}));
}

TEST(Neighborhood, ShellsPartitionNodes) {
    const int m = 7;
    std::vector<int> seen(1 << m, 0);
    for (int o = 0; o <= m; ++o) {
        const auto shell = hamming_neighbors(21, m, o);
        EXPECT_EQ(shell.size(), neighbor_count(m, o));
        for (Node j : shell) ++seen[j];
    }
    for (int c : seen) EXPECT_EQ(c, 1);
}

TEST(Aggregate, UniformAndDelta) {
    std::vector<double> uniform(64, 1.0 / 64);
    const auto u = aggregate(uniform, 2, 6);
    EXPECT_NEAR(u.p_marked, 1.0 / 64, 1e-15);
    EXPECT_NEAR(u.p_first_sum, 6.0 / 64, 1e-15);
    EXPECT_NEAR(u.p_second_sum, 15.0 / 64, 1e-15);
    EXPECT_NEAR(u.residue, 42.0 / 64, 1e-15);
    EXPECT_EQ(u.count_residue, 42u);

    std::vector<double> delta(64, 0.0);
    delta[2] = 1.0;
    const auto d = aggregate(delta, 2, 6);
    EXPECT_EQ(d.p_marked, 1.0);
    EXPECT_EQ(d.p_first_sum + d.p_second_sum + d.residue, 0.0);
    EXPECT_LE(d.p_w(), d.p_f());
    EXPECT_LE(d.p_f(), d.p_s());
}

TEST(Aggregate, XorRelabelInvariant) {
    std::vector<double> p(32);
    double total = 0.0;
    for (int j = 0; j < 32; ++j) total += (p[j] = 1.0 + (j * 7 % 11));
    for (double &v : p) v /= total;
    const auto a = aggregate(p, 5, 5);
    for (Node mask : {3u, 17u, 31u}) {
        std::vector<double> q(32);
        for (Node j = 0; j < 32; ++j) q[j ^ mask] = p[j];
        const auto b = aggregate(q, 5 ^ mask, 5);
        EXPECT_EQ(a.p_marked, b.p_marked);
        EXPECT_DOUBLE_EQ(a.p_first_sum, b.p_first_sum);
        EXPECT_DOUBLE_EQ(a.p_second_sum, b.p_second_sum);
    }
}

TEST(Aggregate, RejectsUnnormalized) {
    std::vector<double> p(16, 1.0 / 15);
    EXPECT_THROW(aggregate(p, 0, 4), InvariantError);
}

TEST(Budget, Measurements) {
    EXPECT_EQ(measurement_budget(6, MeasurementStrategy::None).classical_measurements, 1u);
    EXPECT_EQ(measurement_budget(6, MeasurementStrategy::First).classical_measurements, 7u);
    EXPECT_EQ(measurement_budget(6, MeasurementStrategy::Second).classical_measurements, 22u);
    EXPECT_EQ(measurement_budget(6, MeasurementStrategy::First).total_cost_first, 9u + 6u);
    EXPECT_EQ(measurement_budget(6, MeasurementStrategy::None).oracle_calls_per_run, 18u);
}
