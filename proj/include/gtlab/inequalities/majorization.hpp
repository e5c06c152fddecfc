#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gtlab/core.hpp"
#include "gtlab/inequalities/gap_report.hpp"

namespace gtlab {

/// Raised when a check's hypotheses fail; distinct from an inequality violation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Functionals of a spectrum used in the phi-family inequalities.
struct SpectralFunctional {
  enum class Tag { top_k_abs_eigensum, schatten_power, trace };
  Tag tag = Tag::trace;
  int k = 1;
  double p = 1;

  static SpectralFunctional top_k(int k) {
    if (k < 1) throw DomainError("SpectralFunctional::top_k: k must be >= 1");
    return {Tag::top_k_abs_eigensum, k, 1};
  }
  static SpectralFunctional schatten_power(double p) {
    if (!(p >= 1)) throw DomainError("SpectralFunctional::schatten_power: p must be >= 1");
    return {Tag::schatten_power, 0, p};
  }
  static SpectralFunctional trace() { return {Tag::trace, 0, 1}; }

  /// Value on a list of (possibly complex) eigenvalues. For trace the result
  /// is the real part of the eigenvalue sum.
  template <typename Real>
  Real operator()(const ComplexVector<Real>& eig) const {
    RealVector<Real> mod = eig.cwiseAbs();
    std::sort(mod.data(), mod.data() + mod.size(), std::greater<Real>());
    switch (tag) {
      case Tag::top_k_abs_eigensum: {
        const Index kk = std::min<Index>(k, mod.size());
        return mod.head(kk).sum();
      }
      case Tag::schatten_power: {
        Real s = 0;
        using std::pow;
        for (Index i = 0; i < mod.size(); ++i) s += pow(mod(i), Real(p));
        return s;
      }
      case Tag::trace: return eig.sum().real();
    }
    return Real(0);
  }

  template <typename Real>
  Real operator()(const RealVector<Real>& eig) const {
    return (*this)(ComplexVector<Real>(eig.template cast<Complex<Real>>()));
  }

  std::string name() const {
    switch (tag) {
      case Tag::top_k_abs_eigensum: return "top" + std::to_string(k);
      case Tag::schatten_power: return "schatten^" + std::to_string(p);
      case Tag::trace: return "trace";
    }
    return {};
  }
};

/// sum_{i<=k} mu_i^q >= sum_{i<=k} |lambda_i|^q with w(x) = x^q, q > 0
/// (increasing, and w(e^xi) = e^{q xi} is convex).
template <typename Real>
GapReport weyl_polya_check(const ComplexMatrix<Real>& x, double q, Index k) {
  require_square(x, "weyl_polya_check");
  if (!(q > 0)) throw PreconditionError("weyl_polya_check: weight x^q needs q > 0");
  if (k < 1 || k > x.rows()) throw PreconditionError("weyl_polya_check: k must be in 1..N");
  const RealVector<Real> mu = singular_values(x);
  const RealVector<Real> lam = general_eigen(x).moduli_descending();
  Real lhs = 0, rhs = 0;
  using std::pow;
  for (Index i = 0; i < k; ++i) {
    rhs += pow(mu(i), Real(q));
    lhs += pow(lam(i), Real(q));
  }
  return GapReport::make(double(lhs), double(rhs), "Eq.2.6 k=" + std::to_string(k));
}

/// Both steps of sum mu^{2s} >= sum |lambda|^{2s} >= |sum lambda^{2s}|.
template <typename Real>
std::pair<GapReport, GapReport> weyl_power_chain(const ComplexMatrix<Real>& x, int s) {
  if (s < 1) throw PreconditionError("weyl_power_chain: s must be >= 1");
  const RealVector<Real> mu = singular_values(x);
  const ComplexVector<Real> lam = general_eigen(x).values;
  Real smu = 0, slam = 0;
  Complex<Real> sum_pow = 0;
  for (Index i = 0; i < mu.size(); ++i) {
    smu += std::pow(mu(i), Real(2 * s));
    slam += std::pow(std::abs(lam(i)), Real(2 * s));
    sum_pow += std::pow(lam(i), 2 * s);
  }
  return {GapReport::make(double(slam), double(smu), "Eq.H step 1 s=" + std::to_string(s)),
          GapReport::make(double(std::abs(sum_pow)), double(slam), "Eq.H step 2 s=" + std::to_string(s))};
}

/// Tr (X^dagger X)^s >= |Tr X^{2s}|, from matrix powers directly.
template <typename Real>
GapReport trace_power_check(const ComplexMatrix<Real>& x, int s) {
  if (s < 1) throw PreconditionError("trace_power_check: s must be >= 1");
  require_square(x, "trace_power_check");
  const ComplexMatrix<Real> xdx = x.adjoint() * x;
  const ComplexMatrix<Real> x2 = x * x;
  ComplexMatrix<Real> a = ComplexMatrix<Real>::Identity(x.rows(), x.cols());
  ComplexMatrix<Real> b = a;
  for (int i = 0; i < s; ++i) {
    a = a * xdx;
    b = b * x2;
  }
  return GapReport::make(double(std::abs(Complex<Real>(b.trace()))), double(real_trace<Real>(a)),
                         "Eq.W2 s=" + std::to_string(s));
}

/// phi((X^dagger X)^s) >= |phi(X^{2s})|.
template <typename Real>
GapReport phi_power_check(const ComplexMatrix<Real>& x, const SpectralFunctional& phi, int s) {
  if (s < 1) throw PreconditionError("phi_power_check: s must be >= 1");
  require_square(x, "phi_power_check");
  ComplexMatrix<Real> x2s = ComplexMatrix<Real>::Identity(x.rows(), x.cols());
  const ComplexMatrix<Real> x2 = x * x;
  for (int i = 0; i < s; ++i) x2s = x2s * x2;
  RealVector<Real> mu2 = herm_eigenvalues(HermitianMatrix<Real>(x.adjoint() * x));
  for (Index i = 0; i < mu2.size(); ++i) mu2(i) = std::pow(std::max(mu2(i), Real(0)), Real(s));
  const Real rhs = phi(mu2);
  const Real lhs = std::abs(phi(general_eigen(x2s).values));
  return GapReport::make(double(lhs), double(rhs), "Eq.4 " + phi.name() + " s=" + std::to_string(s));
}

/// Sequences (a, b) with b descending and b_1+..+b_q <= a_1+..+a_q for all q.
template <typename Real>
class MajorizationPair {
 public:
  MajorizationPair(RealVector<Real> a, RealVector<Real> b, Real slack = Real(1e-12))
      : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size() || a_.size() == 0) {
      throw PreconditionError("MajorizationPair: sequences must have the same positive length");
    }
    for (Index i = 1; i < b_.size(); ++i) {
      if (b_(i) > b_(i - 1)) throw PreconditionError("MajorizationPair: b must be sorted descending");
    }
    Real sa = 0, sb = 0;
    for (Index q = 0; q < a_.size(); ++q) {
      sa += a_(q);
      sb += b_(q);
      using std::abs;
      const Real scale = std::max({Real(1), abs(sa), abs(sb)});
      if (sb > sa + slack * scale) {
        throw PreconditionError("MajorizationPair: prefix condition fails at q=" + std::to_string(q + 1));
      }
    }
  }

  const RealVector<Real>& a() const noexcept { return a_; }
  const RealVector<Real>& b() const noexcept { return b_; }

 private:
  RealVector<Real> a_;
  RealVector<Real> b_;
};

/// sum omega(b_i) <= sum omega(a_i) for convex increasing omega.
template <typename Real, typename Omega>
GapReport karamata_check(const MajorizationPair<Real>& pair, Omega&& omega) {
  Real lhs = 0, rhs = 0;
  for (Index i = 0; i < pair.a().size(); ++i) {
    lhs += omega(pair.b()(i));
    rhs += omega(pair.a()(i));
  }
  return GapReport::make(double(lhs), double(rhs), "Lemma5");
}

/// Weyl's log-majorization of X: a = log mu, b = log|lambda|. Zero moduli are
/// floored at 1e-300 before the logarithm.
template <typename Real>
MajorizationPair<Real> weyl_log_pair(const ComplexMatrix<Real>& x) {
  const RealVector<Real> mu = singular_values(x);
  const RealVector<Real> lam = general_eigen(x).moduli_descending();
  RealVector<Real> a(mu.size()), b(mu.size());
  using std::log;
  for (Index i = 0; i < mu.size(); ++i) {
    a(i) = log(std::max(mu(i), Real(1e-300)));
    b(i) = log(std::max(lam(i), Real(1e-300)));
  }
  // Products of moduli match products of singular values only up to rounding.
  return MajorizationPair<Real>(a, b, Real(1e-8));
}

}  // namespace gtlab
