// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qrws {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Generalized Householder traversing coin with a phase multiplier,
///
///     C0(phi, zeta, m) = e^{i zeta} (I - (1 - e^{i phi}) |chi><chi|),
///
/// where |chi> is the uniform unit vector of length m. phi = zeta = pi gives
/// the Grover coin 2|chi><chi| - I. zeta is kept unreduced.
struct CoinSpec {
    int m = 0;
    double phi = kPi;
    double zeta = kPi;
};

/// Precomputed factors of a CoinSpec, applied in O(m) per block.
class HouseholderCoin {
  public:
    explicit HouseholderCoin(const CoinSpec &spec);

    int size() const noexcept { return m_; }
    /// e^{i zeta}
    Complex multiplier() const noexcept { return multiplier_; }
    /// (1 - e^{i phi}) / m, the weight of the block sum in the reflection.
    Complex projector_weight() const noexcept { return projector_weight_; }

    /// In-place transform of one coin block (length m).
    void apply(std::span<Complex> block) const;

  private:
    int m_;
    Complex multiplier_;
    Complex projector_weight_;
};

/// Returns e^{i zeta} (block - (1 - e^{i phi}) <chi|block> chi).
std::vector<Complex> apply_householder_block(std::span<const Complex> block, double phi, double zeta);

/// Dense m x m materialization of the coin.
Eigen::MatrixXcd coin_matrix(double phi, double zeta, int m);

enum class LawKind {
    ConstZeta,       // zeta = pi
    Linear,          // zeta = -2 phi + 3 pi
    NonlinearFixed,  // zeta = -2 phi + 3 pi - sin(2 phi) / (2 pi)
    NonlinearMl,     // zeta = -2 phi + 3 pi + alpha_ml(m) sin(2 phi)
};

/// A functional dependence zeta(phi) tying the two coin phases together.
class DependenceLaw {
  public:
    DependenceLaw() = default;
    explicit DependenceLaw(LawKind kind, std::map<int, double> alpha_ml = {});

    static DependenceLaw parse(std::string_view name, std::map<int, double> alpha_ml = {});

    LawKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept;
    const std::map<int, double> &alpha_table() const noexcept { return alpha_ml_; }
    bool has_alpha(int m) const;

    /// Throws ConfigError for nl-ml when no alpha is configured for this m.
    double alpha(int m) const;

    /// Laws for which the Hill plateau is flat enough for the kappa-ratio
    /// shortcut in robustness_ratio.
    bool is_nonlinear() const noexcept {
        return kind_ == LawKind::NonlinearFixed || kind_ == LawKind::NonlinearMl;
    }

  private:
    LawKind kind_ = LawKind::ConstZeta;
    std::map<int, double> alpha_ml_;
};

std::string_view law_name(LawKind kind) noexcept;
LawKind parse_law_kind(std::string_view name);

/// zeta for the given law. phi must lie in (0, 2 pi); m selects alpha_ml.
double zeta_of_phi(const DependenceLaw &law, double phi, int m);

CoinSpec make_coin(const DependenceLaw &law, double phi, int m);

/// Parses `{"6": -0.11, "7": ...}` (or an object with an "alpha_ml" member).
std::map<int, double> parse_alpha_table(std::string_view json_text);
std::map<int, double> load_alpha_table(const std::string &path);

}  // namespace qrws
