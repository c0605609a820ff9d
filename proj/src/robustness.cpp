// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrws/robustness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "qrws/errors.hpp"
#include "qrws/neighborhood.hpp"
#include "qrws/parallel.hpp"

namespace qrws {

std::string_view level_name(NeighborLevel level) noexcept {
    switch (level) {
        case NeighborLevel::W:
            return "W";
        case NeighborLevel::F:
            return "F";
        case NeighborLevel::S:
            return "S";
    }
    return "W";
}

NeighborLevel parse_level(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "w" || lower == "none") return NeighborLevel::W;
    if (lower == "f" || lower == "first") return NeighborLevel::F;
    if (lower == "s" || lower == "second") return NeighborLevel::S;
    throw ConfigError(fmt::format("unknown neighbor level '{}' (expected W, F, S, none, first or second)", name));
}

std::vector<double> phi_grid(double step) {
    if (!(step > 0.0) || step >= kPi) {
        throw ConfigError(fmt::format("phi grid step must be in (0, pi), got {}", step));
    }
    auto half = static_cast<long>(std::floor(kPi / step));
    while (half > 0 && static_cast<double>(half) * step >= kPi) --half;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(2 * half + 1));
    for (long i = -half; i <= half; ++i) {
        grid.push_back(kPi + static_cast<double>(i) * step);
    }
    return grid;
}

double ProbabilityCurve::step() const {
    if (phi.size() < 2) return 0.0;
    return (phi.back() - phi.front()) / static_cast<double>(phi.size() - 1);
}

void ProbabilityCurve::validate() const {
    if (phi.size() != p.size()) {
        throw InvariantError(fmt::format("curve has {} phi samples but {} probabilities", phi.size(), p.size()));
    }
    const double h = step();
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (i > 0) {
            if (!(phi[i] > phi[i - 1])) {
                throw InvariantError(fmt::format("curve phi not strictly increasing at sample {}", i));
            }
            if (std::abs(phi[i] - phi[i - 1] - h) > 1e-12) {
                throw InvariantError(fmt::format("curve grid step not uniform at sample {}", i));
            }
        }
        if (!(p[i] >= 0.0 && p[i] <= 1.0 + 1e-12)) {
            throw InvariantError(fmt::format("curve probability {} at sample {} outside [0, 1]", p[i], i));
        }
    }
}

ProbabilityCurve PhiSweep::curve(NeighborLevel level) const {
    ProbabilityCurve c{m, law, level, phi, {}};
    switch (level) {
        case NeighborLevel::W:
            c.p = p_w;
            break;
        case NeighborLevel::F:
            c.p = p_f;
            break;
        case NeighborLevel::S:
            c.p = p_s;
            break;
    }
    return c;
}

PhiSweep sweep_phi(int m, const DependenceLaw &law, Node marked, std::span<const double> grid, unsigned jobs) {
    if (m < 2 || m > kMaxCoinSize) {
        throw InvalidDimension(fmt::format("coin size m must be in [2, {}], got {}", kMaxCoinSize, m));
    }
    PhiSweep sweep;
    sweep.m = m;
    sweep.law = std::string(law.name());
    sweep.marked = marked;
    sweep.phi.assign(grid.begin(), grid.end());
    const std::size_t n = grid.size();
    sweep.zeta.resize(n);
    // Resolve every zeta up front so configuration errors surface before any
    // simulation starts.
    for (std::size_t i = 0; i < n; ++i) {
        sweep.zeta[i] = zeta_of_phi(law, grid[i], m);
    }
    sweep.p_w.resize(n);
    sweep.p_f.resize(n);
    sweep.p_s.resize(n);
    parallel_for(n, jobs, [&](std::size_t i) {
        RunConfig cfg;
        cfg.m = m;
        cfg.marked = {marked};
        cfg.coin = {m, sweep.phi[i], sweep.zeta[i]};
        const SimulationResult r = run_standard(cfg);
        const NeighborAggregate agg = aggregate(r.distribution, marked, m);
        sweep.p_w[i] = agg.p_w();
        sweep.p_f[i] = agg.p_f();
        sweep.p_s[i] = agg.p_s();
    });
    return sweep;
}

Heatmap sweep_heatmap(int m, std::span<const double> phi, std::span<const double> zeta, Node marked, unsigned jobs) {
    Heatmap h;
    h.m = m;
    h.marked = marked;
    h.phi.assign(phi.begin(), phi.end());
    h.zeta.assign(zeta.begin(), zeta.end());
    for (double v : h.phi) {
        if (!std::isfinite(v)) throw ConfigError("heatmap phi grid contains a non-finite value");
    }
    for (double v : h.zeta) {
        if (!std::isfinite(v)) throw ConfigError("heatmap zeta grid contains a non-finite value");
    }
    h.p_w.resize(phi.size() * zeta.size());
    parallel_for(h.p_w.size(), jobs, [&](std::size_t idx) {
        const std::size_t i = idx / h.zeta.size();
        const std::size_t k = idx % h.zeta.size();
        RunConfig cfg;
        cfg.m = m;
        cfg.marked = {marked};
        cfg.coin = {m, h.phi[i], h.zeta[k]};
        const SimulationResult r = run_standard(cfg);
        h.p_w[idx] = r.distribution[marked];
    });
    return h;
}

RobustnessReport robustness_epsilon(std::span<const double> phi, std::span<const double> p, double omega) {
    if (phi.empty() || phi.size() != p.size()) {
        throw InvariantError("robustness needs a non-empty curve with matching phi and p samples");
    }
    if (!(omega > 0.0 && omega < 1.0)) {
        throw ConfigError(fmt::format("omega must lie in (0, 1), got {}", omega));
    }
    const double p_max = *std::max_element(p.begin(), p.end());
    const double tie = p_max * (1.0 - 1e-12);
    std::size_t peak = 0;
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] >= tie) {
            const double d = std::abs(phi[i] - kPi);
            if (d < best_distance) {
                best_distance = d;
                peak = i;
            }
        }
    }

    RobustnessReport r;
    r.omega = omega;
    r.peak_index = peak;
    r.phi_max = phi[peak];
    r.p_max = p[peak];
    const double threshold = omega * p_max;
    const std::size_t n = p.size();
    for (std::size_t k = 1;; ++k) {
        if (k > peak || peak + k >= n) {
            r.edge_bounded = true;
            r.epsilon = std::min(r.phi_max, kTwoPi - r.phi_max);
            break;
        }
        if (p[peak - k] < threshold || p[peak + k] < threshold) {
            r.epsilon = (k == 1) ? 0.0 : 0.5 * (phi[peak + k - 1] - phi[peak - k + 1]);
            break;
        }
    }
    return r;
}

RobustnessReport robustness_epsilon(const ProbabilityCurve &curve, double omega) {
    return robustness_epsilon(curve.phi, curve.p, omega);
}

namespace {

std::size_t index_of_pi(const ProbabilityCurve &c) {
    const double h = c.step();
    for (std::size_t i = 0; i < c.phi.size(); ++i) {
        if (std::abs(c.phi[i] - kPi) <= 1e-9 * std::max(h, 1.0)) return i;
    }
    throw ConfigError("lambda normalization needs a grid sample at phi = pi");
}

}  // namespace

LambdaCurves lambda_curves(const ProbabilityCurve &w, const ProbabilityCurve &f, const ProbabilityCurve &s) {
    if (w.phi.size() != f.phi.size() || w.phi.size() != s.phi.size()) {
        throw InvariantError("lambda curves need W, F and S curves on the same grid");
    }
    for (std::size_t i = 0; i < w.phi.size(); ++i) {
        if (w.phi[i] != f.phi[i] || w.phi[i] != s.phi[i]) {
            throw InvariantError(fmt::format("lambda curves: grids differ at sample {}", i));
        }
    }
    if (w.m != f.m || w.m != s.m || w.law != f.law || w.law != s.law) {
        throw InvariantError("lambda curves need W, F and S curves of the same m and law");
    }
    const std::size_t ip = index_of_pi(w);
    const double w0 = w.p[ip], f0 = f.p[ip], s0 = s.p[ip];
    if (w0 < kLambdaMaskThreshold || f0 < kLambdaMaskThreshold || s0 < kLambdaMaskThreshold) {
        throw DegenerateNormalization(
            fmt::format("success probability at phi = pi is ~0 (P_W={}, P_F={}, P_S={})", w0, f0, s0));
    }
    LambdaCurves out;
    out.phi = w.phi;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.lambda1.resize(w.phi.size());
    out.lambda2.resize(w.phi.size());
    for (std::size_t i = 0; i < w.phi.size(); ++i) {
        const double wn = w.p[i] / w0;
        const double fn = f.p[i] / f0;
        const double sn = s.p[i] / s0;
        out.lambda1[i] = (w.p[i] < kLambdaMaskThreshold) ? nan : fn / wn;
        out.lambda2[i] = (f.p[i] < kLambdaMaskThreshold) ? nan : sn / fn;
    }
    return out;
}

double capital_lambda(std::span<const double> phi, std::span<const double> lambda, double epsilon) {
    if (phi.size() != lambda.size() || phi.size() < 2) {
        throw InvariantError("capital lambda needs matching phi and lambda samples");
    }
    const double h = (phi.back() - phi.front()) / static_cast<double>(phi.size() - 1);
    if (!(epsilon >= h * (1.0 - 1e-9))) {
        throw InsufficientResolution(
            fmt::format("robustness interval {} is narrower than one grid step {}", epsilon, h));
    }
    const double lo = kPi - 1e-9 * h;
    const double hi = kPi + epsilon + 1e-9 * h;
    double integral = 0.0;
    std::size_t segments = 0;
    for (std::size_t i = 0; i + 1 < phi.size(); ++i) {
        if (phi[i] < lo || phi[i + 1] > hi) continue;
        if (std::isnan(lambda[i]) || std::isnan(lambda[i + 1])) {
            throw DegenerateNormalization(fmt::format("lambda is masked at phi = {} inside the interval", phi[i]));
        }
        integral += 0.5 * (lambda[i] + lambda[i + 1]) * (phi[i + 1] - phi[i]);
        ++segments;
    }
    if (segments == 0) {
        throw InsufficientResolution("no grid interval inside [pi, pi + epsilon]");
    }
    return integral / epsilon - 1.0;
}

LambdaReport lambda_report(const PhiSweep &sweep, double omega) {
    const ProbabilityCurve w = sweep.curve(NeighborLevel::W);
    LambdaReport rep;
    rep.curves = lambda_curves(w, sweep.curve(NeighborLevel::F), sweep.curve(NeighborLevel::S));
    rep.epsilon_w = robustness_epsilon(w, omega).epsilon;
    rep.interval_lo = kPi;
    rep.interval_hi = kPi + rep.epsilon_w;
    rep.capital_lambda1 = capital_lambda(rep.curves.phi, rep.curves.lambda1, rep.epsilon_w);
    rep.capital_lambda2 = capital_lambda(rep.curves.phi, rep.curves.lambda2, rep.epsilon_w);
    return rep;
}

}  // namespace qrws
