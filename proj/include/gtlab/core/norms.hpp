#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "gtlab/core/expm.hpp"

namespace gtlab {

/// Singular values mu_1 >= ... >= mu_N, the square roots of the eigenvalues
/// of X^dagger X (clamped at zero).
template <typename Real>
RealVector<Real> singular_values(const ComplexMatrix<Real>& x) {
  require_square(x, "singular_values");
  RealVector<Real> ev = herm_eigenvalues(HermitianMatrix<Real>(x.adjoint() * x));
  using std::sqrt;
  for (Index i = 0; i < ev.size(); ++i) ev(i) = sqrt(std::max(ev(i), Real(0)));
  return ev;
}

struct NormKind {
  enum class Tag { schatten, op, frobenius, log_metric };
  Tag tag = Tag::frobenius;
  double p = 2;

  static NormKind schatten(double p) {
    if (!(p >= 1)) throw DomainError("NormKind::schatten: p must be >= 1");
    return {Tag::schatten, p};
  }
  static NormKind op() { return {Tag::op, std::numeric_limits<double>::infinity()}; }
  static NormKind frobenius() { return {Tag::frobenius, 2}; }
  /// Riemannian distance of a positive definite argument from the identity.
  static NormKind log_metric() { return {Tag::log_metric, 2}; }
};

/// (sum v_i^p)^{1/p} for nonnegative v, scaled by max v against overflow.
template <typename Real>
Real power_mean_norm(const RealVector<Real>& v, double p) {
  using std::abs;
  using std::pow;
  const Real top = v.cwiseAbs().maxCoeff();
  if (top == Real(0)) return Real(0);
  if (std::isinf(p)) return top;
  Real s = 0;
  for (Index i = 0; i < v.size(); ++i) s += pow(abs(v(i)) / top, Real(p));
  return top * pow(s, Real(1) / Real(p));
}

template <typename Real>
Real schatten_norm(const ComplexMatrix<Real>& x, double p) {
  if (!(p >= 1)) throw DomainError("schatten_norm: p must be >= 1");
  return power_mean_norm(singular_values(x), p);
}

template <typename Real>
Real operator_norm(const ComplexMatrix<Real>& x) {
  return singular_values(x)(0);
}

/// For Hermitian X, ||X||_op = max(-lambda_min, lambda_max).
template <typename Real>
Real operator_norm(const HermitianMatrix<Real>& x) {
  const RealVector<Real> ev = herm_eigenvalues(x);
  return std::max(-ev(ev.size() - 1), ev(0));
}

/// delta_2(P, Q) = sqrt(sum log^2 lambda_i(Q^{-1/2} P Q^{-1/2})) for positive definite P, Q.
/// Eigenvalues are clamped below at 1e-300 before the logarithm.
template <typename Real>
Real log_metric_distance(const HermitianMatrix<Real>& p, const HermitianMatrix<Real>& q) {
  require_same_dim(p.matrix(), q.matrix(), "log_metric_distance");
  const Spectrum<Real> qs = herm_eigen(q);
  if (!(qs.min() > Real(0))) throw DomainError("log_metric_distance: Q is not positive definite");
  if (!(herm_eigenvalues(p).minCoeff() > Real(0))) {
    throw DomainError("log_metric_distance: P is not positive definite");
  }
  using std::sqrt;
  const HermitianMatrix<Real> q_inv_half = qs.apply([](Real x) { return Real(1) / sqrt(x); });
  const RealVector<Real> ev =
      herm_eigenvalues(HermitianMatrix<Real>(q_inv_half.matrix() * p.matrix() * q_inv_half.matrix()));
  Real s = 0;
  using std::log;
  for (Index i = 0; i < ev.size(); ++i) {
    const Real l = log(std::max(ev(i), Real(1e-300)));
    s += l * l;
  }
  return sqrt(s);
}

/// Eigenvalues of e^{-B/2} e^A e^{-B/2}, i.e. of e^A e^{-B}.
template <typename Real>
RealVector<Real> relative_exp_spectrum(const HermitianMatrix<Real>& a, const HermitianMatrix<Real>& b) {
  require_same_dim(a.matrix(), b.matrix(), "relative_exp_spectrum");
  const ComplexMatrix<Real> half = expm(b * Real(-0.5)).matrix();
  return herm_eigenvalues(HermitianMatrix<Real>(half * expm(a).matrix() * half));
}

/// delta_2(e^A, e^B) for Hermitian A, B.
template <typename Real>
Real distance_delta2(const HermitianMatrix<Real>& a, const HermitianMatrix<Real>& b) {
  const RealVector<Real> ev = relative_exp_spectrum(a, b);
  Real s = 0;
  using std::log;
  for (Index i = 0; i < ev.size(); ++i) {
    const Real l = log(std::max(ev(i), Real(1e-300)));
    s += l * l;
  }
  using std::sqrt;
  return sqrt(s);
}

template <typename Real>
Real norm(const ComplexMatrix<Real>& x, const NormKind& kind) {
  switch (kind.tag) {
    case NormKind::Tag::schatten: return schatten_norm(x, kind.p);
    case NormKind::Tag::op: return operator_norm(x);
    case NormKind::Tag::frobenius: require_square(x, "norm"); return x.norm();
    case NormKind::Tag::log_metric: {
      require_square(x, "norm");
      const Real scale = std::max(x.cwiseAbs().maxCoeff(), Real(1));
      if ((x - x.adjoint()).cwiseAbs().maxCoeff() > Real(1e-12) * scale) {
        throw DomainError("norm: log-metric requires a Hermitian argument");
      }
      const HermitianMatrix<Real> h(x);
      return log_metric_distance(h, HermitianMatrix<Real>::identity(h.dim()));
    }
  }
  return Real(0);
}

}  // namespace gtlab
