// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qrws {

/// Residuals r(x) and optionally the Jacobian dr/dx (rows: residuals).
struct LeastSquaresProblem {
    Eigen::Index residual_count = 0;
    std::function<void(const Eigen::VectorXd &x, Eigen::VectorXd &residuals, Eigen::MatrixXd *jacobian)> evaluate;
    /// Trial points failing this are rejected like an uphill step.
    std::function<bool(const Eigen::VectorXd &x)> feasible;
};

struct LeastSquaresOptions {
    int max_iterations = 500;
    /// Converged once max |step| <= step_tolerance * (1 + max |x|).
    double step_tolerance = 1e-10;
    /// Also converged once an accepted step lowers the cost by at most this
    /// fraction. 0 disables the test.
    double cost_tolerance = 0.0;
    /// Parameters held fixed at their starting value.
    std::vector<bool> frozen;
};

struct LeastSquaresSummary {
    Eigen::VectorXd x;
    double cost = 0.0;  // sum of squared residuals
    int iterations = 0;
    bool converged = false;
    std::string message;
};

/// Levenberg-Marquardt with Marquardt's diagonal scaling. Deterministic.
LeastSquaresSummary levenberg_marquardt(const LeastSquaresProblem &problem, const Eigen::VectorXd &x0,
                                        const LeastSquaresOptions &options = {});

}  // namespace qrws
