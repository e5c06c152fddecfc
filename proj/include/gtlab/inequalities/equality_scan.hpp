#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "gtlab/core.hpp"

namespace gtlab {

struct ScanConfig {
  std::vector<double> epsilon_grid;
  double beta = 1;

  /// n points log-spaced over [lo, hi].
  static ScanConfig log_grid(double lo, double hi, int n) {
    ScanConfig c;
    for (int i = 0; i < n; ++i) c.epsilon_grid.push_back(lo * std::pow(hi / lo, double(i) / double(n - 1)));
    return c;
  }

  void validate() const {
    if (epsilon_grid.size() < 5) throw DomainError("ScanConfig: grid needs at least 5 points");
    for (std::size_t i = 0; i < epsilon_grid.size(); ++i) {
      if (!(epsilon_grid[i] > 0)) throw DomainError("ScanConfig: grid values must be > 0");
      if (i > 0 && !(epsilon_grid[i] > epsilon_grid[i - 1])) {
        throw DomainError("ScanConfig: grid must be strictly increasing");
      }
    }
    if (!(beta > 0)) throw DomainError("ScanConfig: beta must be > 0");
  }
};

struct ScanResult {
  std::vector<double> epsilon;
  /// g(eps) = Tr(e^{eps A} e^{eps B}) - Tr e^{eps(A+B)}.
  std::vector<double> gap;
  /// Rounding floor of each gap; smaller gaps carry no information and are left out of the fits.
  std::vector<double> noise_floor;
  double max_abs_gap = 0;
  bool commuting = false;
  /// Leading power of g, from log g = c + p log eps + b1 t + b2 t^2 with
  /// t = eps/eps_max, weighted by inverse rounding variance (absent when commuting).
  std::optional<double> order;
  /// g(eps)/eps^4 extrapolated to eps = 0 by a weighted quadratic fit in eps.
  std::optional<double> quartic_coefficient;
};

/// [A, B] is treated as zero below this fraction of ||A||_F ||B||_F.
inline constexpr double kCommutatorTolerance = 1e-12;

/// Gaps below this many ulps of Tr e^{eps(A+B)} are rounding noise.
inline constexpr double kGapNoiseUlps = 64;

/// Scans the Golden-Thompson gap at scale eps. For commuting A, B the gap
/// vanishes identically; otherwise the eps^0 .. eps^3 terms cancel and the
/// fitted order is 4.
template <typename Real>
ScanResult equality_order_scan(const HermitianMatrix<Real>& a, const HermitianMatrix<Real>& b,
                               const ScanConfig& cfg) {
  cfg.validate();
  require_same_dim(a.matrix(), b.matrix(), "equality_order_scan");
  ScanResult out;
  const Real comm = commutator<Real>(a.matrix(), b.matrix()).norm();
  out.commuting = comm <= Real(kCommutatorTolerance) * std::max(a.matrix().norm() * b.matrix().norm(), Real(1e-300));
  for (double e : cfg.epsilon_grid) {
    const Real eps = Real(e);
    const Real rhs = real_trace<Real>(ComplexMatrix<Real>(expm(a * eps).matrix() * expm(b * eps).matrix()));
    const Real lhs = expm((a + b) * eps).trace();
    out.epsilon.push_back(e);
    out.gap.push_back(double(rhs - lhs));
    out.noise_floor.push_back(kGapNoiseUlps * std::numeric_limits<double>::epsilon() * std::abs(double(lhs)));
    out.max_abs_gap = std::max(out.max_abs_gap, std::abs(double(rhs - lhs)));
  }
  if (out.commuting) return out;

  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < out.gap.size(); ++i) {
    if (out.gap[i] > out.noise_floor[i]) used.push_back(i);
  }
  if (used.size() < 5 || out.epsilon[used.back()] / out.epsilon[used.front()] < 10.0) {
    throw DomainError("equality_order_scan: fewer than 5 gaps above rounding over one decade; "
                      "grid too fine for a stable fit");
  }
  const double e_max = out.epsilon[used.back()];
  Eigen::Matrix4d order_normal = Eigen::Matrix4d::Zero();
  Eigen::Vector4d order_rhs = Eigen::Vector4d::Zero();
  // g/eps^4 = c0 + c1 t + c2 t^2 with weights t^8, the inverse variance of
  // rounding noise in g/eps^4.
  Eigen::Matrix3d coef_normal = Eigen::Matrix3d::Zero();
  Eigen::Vector3d coef_rhs = Eigen::Vector3d::Zero();
  for (std::size_t i : used) {
    const double e = out.epsilon[i];
    const double g = out.gap[i];
    const double t = e / e_max;
    const double rel = out.noise_floor[i] / g;
    const double w_order = 1.0 / (rel * rel + 1e-20);
    const Eigen::Vector4d x(1.0, std::log(e), t, t * t);
    order_normal += w_order * x * x.transpose();
    order_rhs += w_order * x * std::log(g);
    const double w = std::pow(t, 8);
    const Eigen::Vector3d basis(1.0, t, t * t);
    coef_normal += w * basis * basis.transpose();
    coef_rhs += w * basis * (g / (e * e * e * e));
  }
  out.order = order_normal.ldlt().solve(order_rhs)(1);
  out.quartic_coefficient = coef_normal.ldlt().solve(coef_rhs)(0);
  return out;
}

}  // namespace gtlab
