#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "gtlab/core.hpp"
#include "gtlab/inequalities/gap_report.hpp"
#include "gtlab/inequalities/majorization.hpp"
#include "gtlab/numerics/quadrature.hpp"

namespace gtlab {

/// Tr e^{A+B} <= Tr(e^A e^B).
template <typename Real>
GapReport gt_gap(const HermitianMatrix<Real>& a, const HermitianMatrix<Real>& b) {
  require_same_dim(a.matrix(), b.matrix(), "gt_gap");
  const Real lhs = expm(a + b).trace();
  const Real rhs = real_trace<Real>(ComplexMatrix<Real>(expm(a).matrix() * expm(b).matrix()));
  return GapReport::make(double(lhs), double(rhs), "Eq.1 N=" + std::to_string(a.dim()));
}

/// phi(e^{A+B}) <= phi(e^A e^B) for the top-k, Schatten-power and trace
/// functionals. e^A e^B is similar to e^{A/2} e^B e^{A/2}, whose spectrum is
/// real and positive.
template <typename Real>
GapReport phi_exp_check(const HermitianMatrix<Real>& a, const HermitianMatrix<Real>& b,
                        const SpectralFunctional& phi) {
  require_same_dim(a.matrix(), b.matrix(), "phi_exp_check");
  const RealVector<Real> lhs_eig = herm_eigen(a + b).values.unaryExpr([](Real x) {
    using std::exp;
    return exp(x);
  });
  const ComplexMatrix<Real> ea_half = expm(a * Real(0.5)).matrix();
  const RealVector<Real> rhs_eig =
      herm_eigenvalues(HermitianMatrix<Real>(ea_half * expm(b).matrix() * ea_half));
  return GapReport::make(double(phi(lhs_eig)), double(phi(rhs_eig)), "Eq.4.1 " + phi.name());
}

struct NormVariant {
  enum class Tag { schatten, symmetrized, log_metric, alt, weak_majorization };
  Tag tag = Tag::schatten;
  double p = 1;
  double r = 2;
  double s = 1;
  int k = 0;  // weak majorization: largest prefix checked, 0 for all

  static NormVariant schatten(double p) { return {Tag::schatten, p}; }
  static NormVariant symmetrized(double p) { return {Tag::symmetrized, p}; }
  static NormVariant log_metric(double p = 2) { return {Tag::log_metric, p}; }
  static NormVariant alt(double r, double s) { return {Tag::alt, 1, r, s}; }
  static NormVariant weak_majorization(int k = 0) { return {Tag::weak_majorization, 1, 2, 1, k}; }

  std::string name() const {
    switch (tag) {
      case Tag::schatten: return "Eq.5 p=" + std::to_string(p);
      case Tag::symmetrized: return "Eq.5a p=" + std::to_string(p);
      case Tag::log_metric: return (p == 2 ? "Eq.Sn1" : "Eq.Sn p=" + std::to_string(p));
      case Tag::alt: return "ALT r=" + std::to_string(r) + " s=" + std::to_string(s);
      case Tag::weak_majorization: return "weak-majorization";
    }
    return {};
  }
};

namespace detail {

template <typename Real>
HermitianMatrix<Real> pd_power(const Spectrum<Real>& s, Real power) {
  return s.apply([power](Real x) {
    using std::pow;
    return pow(x, power);
  });
}

}  // namespace detail

/// Norm and majorization variants of Golden-Thompson:
///   schatten(p):        ||e^{A+B}||_p <= ||e^A e^B||_p
///   symmetrized(p):     Tr e^{A+B} <= Tr (e^{pB/2} e^{pA} e^{pB/2})^{1/p}
///   log_metric(p):      ||A - B||_p <= ||log(e^{-B/2} e^A e^{-B/2})||_p   (p = 2 is delta_2)
///   alt(r, s):          Tr (A^{1/2} B A^{1/2})^{rs} <= Tr (A^{r/2} B^r A^{r/2})^s, A, B > 0
///   weak_majorization:  sum_{i<=k} lambda_i(e^{A+B}) <= sum_{i<=k} mu_i(e^A e^B), worst k reported
template <typename Real>
GapReport norm_variant_gap(const HermitianMatrix<Real>& a, const HermitianMatrix<Real>& b,
                           const NormVariant& v) {
  require_same_dim(a.matrix(), b.matrix(), "norm_variant_gap");
  using T = NormVariant::Tag;
  switch (v.tag) {
    case T::schatten: {
      const ComplexMatrix<Real> lhs_m = expm(a + b).matrix();
      const ComplexMatrix<Real> rhs_m = expm(a).matrix() * expm(b).matrix();
      return GapReport::make(double(schatten_norm<Real>(lhs_m, v.p)), double(schatten_norm<Real>(rhs_m, v.p)),
                             v.name());
    }
    case T::symmetrized: {
      if (!(v.p > 0) || std::isinf(v.p)) throw DomainError("norm_variant_gap: symmetrized needs finite p > 0");
      const ComplexMatrix<Real> eb = expm(b * Real(v.p / 2)).matrix();
      const Spectrum<Real> s = herm_eigen(HermitianMatrix<Real>(eb * expm(a * Real(v.p)).matrix() * eb));
      Real rhs = 0;
      for (Index i = 0; i < s.values.size(); ++i) rhs += std::pow(std::max(s.values(i), Real(0)), Real(1 / v.p));
      return GapReport::make(double(expm(a + b).trace()), double(rhs), v.name());
    }
    case T::log_metric: {
      const Real lhs = schatten_norm<Real>((a - b).matrix(), v.p);
      Real rhs;
      if (v.p == 2) {
        rhs = distance_delta2(a, b);
      } else {
        RealVector<Real> logs = relative_exp_spectrum(a, b);
        for (Index i = 0; i < logs.size(); ++i) logs(i) = std::log(std::max(logs(i), Real(1e-300)));
        rhs = power_mean_norm<Real>(logs, v.p);
      }
      return GapReport::make(double(lhs), double(rhs), v.name());
    }
    case T::alt: {
      if (!(v.r >= 1) || !(v.s > 0)) throw DomainError("norm_variant_gap: alt needs r >= 1, s > 0");
      const Spectrum<Real> sa = herm_eigen(a);
      const Spectrum<Real> sb = herm_eigen(b);
      if (!(sa.min() > 0) || !(sb.min() > 0)) {
        throw DomainError("norm_variant_gap: alt requires positive definite A and B");
      }
      const ComplexMatrix<Real> a_half = detail::pd_power(sa, Real(0.5)).matrix();
      const ComplexMatrix<Real> a_r_half = detail::pd_power(sa, Real(v.r / 2)).matrix();
      const ComplexMatrix<Real> b_r = detail::pd_power(sb, Real(v.r)).matrix();
      const RealVector<Real> l = herm_eigenvalues(HermitianMatrix<Real>(a_half * b.matrix() * a_half));
      const RealVector<Real> r = herm_eigenvalues(HermitianMatrix<Real>(a_r_half * b_r * a_r_half));
      Real lhs = 0, rhs = 0;
      for (Index i = 0; i < l.size(); ++i) {
        lhs += std::pow(std::max(l(i), Real(0)), Real(v.r * v.s));
        rhs += std::pow(std::max(r(i), Real(0)), Real(v.s));
      }
      return GapReport::make(double(lhs), double(rhs), v.name());
    }
    case T::weak_majorization: {
      const RealVector<Real> lam = herm_eigen(a + b).values.unaryExpr([](Real x) { return std::exp(x); });
      const RealVector<Real> mu =
          singular_values<Real>(ComplexMatrix<Real>(expm(a).matrix() * expm(b).matrix()));
      const Index kmax = v.k > 0 ? std::min<Index>(v.k, lam.size()) : lam.size();
      GapReport worst;
      Real sl = 0, sm = 0;
      for (Index k = 0; k < kmax; ++k) {
        sl += lam(k);
        sm += mu(k);
        GapReport r = GapReport::make(double(sl), double(sm), "weak-majorization k=" + std::to_string(k + 1));
        if (k == 0 || r.relative_margin() < worst.relative_margin()) worst = r;
      }
      return worst;
    }
  }
  throw DomainError("norm_variant_gap: unknown variant");
}

/// |phi(e^{A+B})| <= phi(e^{(A+A^dagger)/2} e^{(B+B^dagger)/2}) for general A, B and
/// phi = sum of the k largest |eigenvalues|.
template <typename Real>
GapReport nonhermitian_bound(const ComplexMatrix<Real>& a, const ComplexMatrix<Real>& b, int k) {
  require_square(a, "nonhermitian_bound");
  require_same_dim(a, b, "nonhermitian_bound");
  const SpectralFunctional phi = SpectralFunctional::top_k(k);
  const ComplexMatrix<Real> e = expm<Real>(ComplexMatrix<Real>(a + b));
  const Real lhs = std::abs(phi(general_eigen(e).values));
  const HermitianMatrix<Real> ha(a);
  const HermitianMatrix<Real> hb(b);
  const ComplexMatrix<Real> eb_half = expm(hb * Real(0.5)).matrix();
  const Real rhs = phi(herm_eigenvalues(HermitianMatrix<Real>(eb_half * expm(ha).matrix() * eb_half)));
  return GapReport::make(double(lhs), double(rhs), "Eq.4.1a k=" + std::to_string(k));
}

/// Re lambda_1(A) <= lambda_1((A + A^dagger)/2).
template <typename Real>
GapReport hermitian_part_bound(const ComplexMatrix<Real>& a) {
  require_square(a, "hermitian_part_bound");
  const Real lhs = general_eigen(a).max_real_part();
  const Real rhs = herm_eigenvalues(HermitianMatrix<Real>(a))(0);
  return GapReport::make(double(lhs), double(rhs), "Eq.4.1b");
}

/// Relative disagreement between the closed-form kernel and quadrature
/// beyond which the triple bound raises.
inline constexpr double kLiebRouteTolerance = 1e-6;

struct LiebTripleReport {
  GapReport gap;
  std::optional<double> quadrature_rhs;
  std::optional<double> quadrature_error;
  /// |closed form - quadrature| / max(1, |closed form|).
  std::optional<double> route_deviation;
};

namespace detail {

/// kappa(g, h) = (log g - log h) / (g - h), with log g = lg, log h = lh;
/// 1/g at g == h, series when |g - h| < 1e-8 g.
template <typename Real>
Real lieb_kernel(Real g, Real lg, Real h, Real lh) {
  using std::abs;
  if (abs(g - h) < Real(1e-8) * g) {
    const Real x = (g - h) / h;  // g = h (1 + x)
    return (Real(1) - x / Real(2) + x * x / Real(3) - x * x * x / Real(4)) / h;
  }
  return (lg - lh) / (g - h);
}

}  // namespace detail

/// Tr e^{A+B+C} <= int_0^inf Tr(e^A (t + e^{-C})^{-1} e^B (t + e^{-C})^{-1}) dt.
///
/// The right side is evaluated in the eigenbasis W of C, where e^{-C} has
/// eigenvalues g_i = e^{-c_i}: with M = W^dagger e^A W and K = W^dagger e^B W,
/// rhs = sum_{ij} M_ij K_ji kappa(g_i, g_j). With `quadrature` set, the
/// integral is also computed directly (matrix inverses, adaptive Gauss-Kronrod
/// on [0, T] and a Neumann-series tail beyond T) and must agree.
template <typename Real>
LiebTripleReport lieb_triple_bound(const HermitianMatrix<Real>& a, const HermitianMatrix<Real>& b,
                                   const HermitianMatrix<Real>& c, bool quadrature = false) {
  require_same_dim(a.matrix(), b.matrix(), "lieb_triple_bound");
  require_same_dim(a.matrix(), c.matrix(), "lieb_triple_bound");
  const Index n = a.dim();
  const Spectrum<Real> sc = herm_eigen(c);
  const ComplexMatrix<Real>& w = sc.basis;
  const ComplexMatrix<Real> m = w.adjoint() * expm(a).matrix() * w;
  const ComplexMatrix<Real> kk = w.adjoint() * expm(b).matrix() * w;
  Complex<Real> rhs_c = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Real lgi = -sc.values(i);
      const Real lgj = -sc.values(j);
      using std::exp;
      rhs_c += m(i, j) * kk(j, i) * detail::lieb_kernel(exp(lgi), lgi, exp(lgj), lgj);
    }
  }
  const double lhs = double(expm(a + b + c).trace());
  LiebTripleReport out{GapReport::make(lhs, double(rhs_c.real()), "Eq.4.1c N=" + std::to_string(n)), {}, {}, {}};
  if (!quadrature) return out;

  // Direct route, in double: G = e^{-C} by scaling and squaring.
  const ComplexMatrix<double> ea = expm(a).matrix().template cast<Complex<double>>();
  const ComplexMatrix<double> eb = expm(b).matrix().template cast<Complex<double>>();
  const ComplexMatrix<double> g = expm<double>(ComplexMatrix<double>((-c.matrix()).template cast<Complex<double>>()));
  const ComplexMatrix<double> id = ComplexMatrix<double>::Identity(n, n);
  auto integrand = [&](double t) {
    const ComplexMatrix<double> r = (g + t * id).partialPivLu().inverse();
    return (ea * r * eb * r).trace().real();
  };
  const double gnorm = g.cwiseAbs().rowwise().sum().maxCoeff();
  const double big_t = 100.0 * std::max(1.0, gnorm);
  const double scale = std::abs(double(rhs_c.real()));
  const QuadratureResult q = integrate_adaptive(integrand, 0.0, big_t, 1e-14 * std::max(1.0, scale), 1e-13, 20000);

  // int_T^inf t^{-(j+2)} dt summed over words e^A G^m e^B G^{j-m}, with
  // (t + G)^{-1} = sum_m (-G)^m / t^{m+1}.
  std::vector<ComplexMatrix<double>> gp{id};
  double tail = 0;
  for (int j = 0; j < 60; ++j) {
    if (static_cast<int>(gp.size()) <= j) gp.push_back(gp.back() * g);
    double sum = 0;
    for (int mm = 0; mm <= j; ++mm) sum += (ea * gp[static_cast<std::size_t>(mm)] * eb * gp[static_cast<std::size_t>(j - mm)]).trace().real();
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double term = sign * sum * std::pow(big_t, -(j + 1)) / double(j + 1);
    tail += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(tail))) break;
  }
  const double quad_rhs = q.value + tail;
  out.quadrature_rhs = quad_rhs;
  out.quadrature_error = q.error;
  out.route_deviation = std::abs(quad_rhs - double(rhs_c.real())) / std::max(1.0, std::abs(double(rhs_c.real())));
  if (!q.converged || *out.route_deviation > kLiebRouteTolerance) {
    throw ConvergenceError("lieb_triple_bound: closed form and quadrature disagree (deviation " +
                               std::to_string(*out.route_deviation) + ")",
                           n, 20000);
  }
  return out;
}

}  // namespace gtlab
