// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrws/least_squares.hpp"

#include <cmath>

#include <fmt/format.h>

namespace qrws {

namespace {

constexpr double kInitialDamping = 1e-3;
constexpr double kMaxDamping = 1e20;

}  // namespace

LeastSquaresSummary levenberg_marquardt(const LeastSquaresProblem &problem, const Eigen::VectorXd &x0,
                                        const LeastSquaresOptions &options) {
    const Eigen::Index n = x0.size();
    std::vector<Eigen::Index> free;
    for (Eigen::Index i = 0; i < n; ++i) {
        const bool frozen = static_cast<std::size_t>(i) < options.frozen.size() && options.frozen[i];
        if (!frozen) free.push_back(i);
    }
    const auto nf = static_cast<Eigen::Index>(free.size());

    LeastSquaresSummary out;
    out.x = x0;
    Eigen::VectorXd r(problem.residual_count);
    Eigen::MatrixXd jac(problem.residual_count, n);
    problem.evaluate(out.x, r, &jac);
    out.cost = r.squaredNorm();
    if (!std::isfinite(out.cost)) {
        out.message = "cost is not finite at the starting point";
        return out;
    }
    if (nf == 0) {
        out.converged = true;
        out.message = "no free parameters";
        return out;
    }

    double damping = kInitialDamping;
    Eigen::VectorXd trial_r(problem.residual_count);
    for (out.iterations = 0; out.iterations < options.max_iterations; ++out.iterations) {
        Eigen::MatrixXd jf(problem.residual_count, nf);
        for (Eigen::Index c = 0; c < nf; ++c) jf.col(c) = jac.col(free[c]);
        const Eigen::MatrixXd a = jf.transpose() * jf;
        const Eigen::VectorXd g = jf.transpose() * r;
        if (g.lpNorm<Eigen::Infinity>() == 0.0) {
            out.converged = true;
            out.message = "zero gradient";
            return out;
        }

        const double scale = 1.0 + out.x.lpNorm<Eigen::Infinity>();
        for (;;) {
            Eigen::MatrixXd damped = a;
            for (Eigen::Index i = 0; i < nf; ++i) {
                const double d = a(i, i) > 0.0 ? a(i, i) : 1.0;
                damped(i, i) += damping * d;
            }
            const Eigen::VectorXd step = damped.ldlt().solve(-g);
            const double step_size = step.lpNorm<Eigen::Infinity>();
            Eigen::VectorXd trial = out.x;
            for (Eigen::Index c = 0; c < nf; ++c) trial(free[c]) += step(c);

            bool accepted = false;
            bool stalled = false;
            if (step.allFinite() && (!problem.feasible || problem.feasible(trial))) {
                problem.evaluate(trial, trial_r, nullptr);
                const double trial_cost = trial_r.squaredNorm();
                if (std::isfinite(trial_cost) && trial_cost < out.cost) {
                    stalled = out.cost - trial_cost <= options.cost_tolerance * out.cost;
                    out.x = trial;
                    out.cost = trial_cost;
                    damping = std::max(damping / 10.0, 1e-15);
                    accepted = true;
                }
            }
            if (step_size <= options.step_tolerance * scale) {
                if (accepted) problem.evaluate(out.x, r, &jac);
                out.converged = true;
                out.message = "step below tolerance";
                ++out.iterations;
                return out;
            }
            if (stalled) {
                problem.evaluate(out.x, r, &jac);
                out.converged = true;
                out.message = "relative cost reduction below tolerance";
                ++out.iterations;
                return out;
            }
            if (accepted) break;
            damping *= 10.0;
            if (damping > kMaxDamping) {
                out.converged = true;
                out.message = "no downhill step at maximal damping";
                return out;
            }
        }
        problem.evaluate(out.x, r, &jac);
    }
    out.message = fmt::format("no convergence within {} iterations", options.max_iterations);
    return out;
}

}  // namespace qrws
