#pragma once

#include <optional>

#include <Eigen/Dense>

#include "gtlab/core.hpp"
#include "gtlab/numerics/statistics.hpp"
#include "gtlab/random/rng.hpp"

namespace gtlab {

/// Ratio of two Monte Carlo means with a delta-method interval.
struct RatioEstimate {
  double numerator_mean = 0;
  double numerator_se = 0;
  double denominator_mean = 0;
  double denominator_se = 0;
  double ratio = 0;
  double ratio_se = 0;
  Interval ci;
  long trials = 0;
  /// Hermitization study only.
  Index dim = 0;
  int retries = 0;
};

struct PauliRatioEstimate {
  RatioEstimate estimate;
  /// Trace of the 2 sinh|a| sinh|b| cos(theta) term, dropped from the numerator.
  double cross_term_mean = 0;
  double cross_term_se = 0;
  /// Trials with Tr(e^A e^B) < Tr e^{A+B} beyond the inequality tolerance.
  long golden_thompson_violations = 0;
};

/// E Tr(e^A e^B) / E Tr e^{A+B} for A = a.sigma, B = b.sigma with standard
/// Gaussian a, b. The numerator averages 2 cosh|a| cosh|b|, the denominator
/// 2 cosh|a+b|. An optional rotation is applied to every sampled vector.
PauliRatioEstimate pauli_ratio_mc(long trials, const RngStream& stream,
                                  const std::optional<Eigen::Matrix3d>& rotation = std::nullopt);

/// The same draws as pauli_ratio_mc, with both traces from 2 x 2 matrix
/// exponentials (the numerator then includes the cross term).
RatioEstimate pauli_ratio_matrix_route(long trials, const RngStream& stream);

struct PauliQuadrature {
  double ratio = 0;
  /// E cosh|a|; the numerator is its square.
  double radial_mean = 0;
  double numerator = 0;
  double denominator = 0;
  double error = 0;
};

/// Radial chi_3 integrals of cosh r and cosh(sqrt(2) r) on [0, 50]. tol >= 1e-10.
PauliQuadrature pauli_ratio_quadrature(double tol = 1e-10);

struct HermitizationOptions {
  bool real = false;
  double scale = 1;
};

/// E lambda_1((A + A^dagger)/2) / E max Re lambda(A) for N x N Ginibre A.
/// A trial whose eigensolver fails is redrawn from a child stream.
RatioEstimate hermitization_ratio(Index n, long trials, const RngStream& stream,
                                  const HermitizationOptions& options = {});

}  // namespace gtlab
