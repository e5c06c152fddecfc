#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "gtlab/core/matrix.hpp"

namespace gtlab {

/// Eigen-decomposition of a Hermitian matrix: real values sorted descending,
/// columns of `basis` are the matching orthonormal eigenvectors.
template <typename Real>
struct Spectrum {
  RealVector<Real> values;
  ComplexMatrix<Real> basis;

  Real max() const { return values(0); }
  Real min() const { return values(values.size() - 1); }

  ComplexMatrix<Real> reconstruct() const {
    return basis * values.template cast<Complex<Real>>().asDiagonal() * basis.adjoint();
  }

  /// U f(diag) U^dagger for a scalar function f.
  template <typename F>
  HermitianMatrix<Real> apply(F&& f) const {
    ComplexVector<Real> fv(values.size());
    for (Index i = 0; i < values.size(); ++i) fv(i) = Complex<Real>(f(values(i)));
    return HermitianMatrix<Real>(basis * fv.asDiagonal() * basis.adjoint());
  }
};

/// Eigenvalues of a general square matrix, sorted descending by real part
/// then by modulus.
template <typename Real>
struct ComplexSpectrum {
  ComplexVector<Real> values;

  Real max_real_part() const { return values(0).real(); }

  Complex<Real> sum() const { return values.sum(); }
  Complex<Real> product() const { return values.prod(); }

  /// Moduli in descending order.
  RealVector<Real> moduli_descending() const {
    RealVector<Real> m = values.cwiseAbs();
    std::sort(m.data(), m.data() + m.size(), std::greater<Real>());
    return m;
  }
};

struct JacobiOptions {
  int max_sweeps = 30;
  bool compute_basis = true;
};

namespace detail {

template <typename Real>
Real off_diagonal_norm2(const ComplexMatrix<Real>& a) {
  Real s = 0;
  const Index n = a.rows();
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

template <typename Real>
void sort_descending(RealVector<Real>& values, ComplexMatrix<Real>* basis) {
  const Index n = values.size();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return values(a) > values(b); });
  RealVector<Real> v(n);
  for (Index i = 0; i < n; ++i) v(i) = values(order[i]);
  values = v;
  if (basis != nullptr && basis->size() != 0) {
    ComplexMatrix<Real> b(basis->rows(), n);
    for (Index i = 0; i < n; ++i) b.col(i) = basis->col(order[i]);
    *basis = std::move(b);
  }
}

}  // namespace detail

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// Each rotation first removes the phase of a(p,q) with diag(1, e^{-i phi}) and
/// then applies the real symmetric Jacobi rotation. A sweep visits every (p,q)
/// pair once; convergence is declared when the off-diagonal Frobenius mass
/// falls below epsilon * ||A||_F.
template <typename Real>
Spectrum<Real> herm_eigen(const HermitianMatrix<Real>& m, const JacobiOptions& opt = {}) {
  using C = Complex<Real>;
  const Index n = m.dim();
  ComplexMatrix<Real> a = m.matrix();
  ComplexMatrix<Real> v;
  if (opt.compute_basis) v = ComplexMatrix<Real>::Identity(n, n);

  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real total = a.squaredNorm();
  const Real target = eps * eps * total;

  bool converged = detail::off_diagonal_norm2(a) <= target;
  for (int sweep = 0; sweep < opt.max_sweeps && !converged; ++sweep) {
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const C apq = a(q, p) == C(0) ? C(0) : std::conj(a(q, p));
        const Real r = std::abs(apq);
        if (r == Real(0)) continue;
        const Real app = a(p, p).real();
        const Real aqq = a(q, q).real();
        // Skip elements already negligible against both diagonal entries.
        if (sweep > 3 && std::abs(app) + Real(100) * r == std::abs(app) &&
            std::abs(aqq) + Real(100) * r == std::abs(aqq)) {
          a(p, q) = a(q, p) = C(0);
          continue;
        }
        const C phase = apq / r;  // e^{i phi}
        const C phase_conj = std::conj(phase);
        const Real theta = (aqq - app) / (Real(2) * r);
        Real t = Real(1) / (std::abs(theta) + std::sqrt(theta * theta + Real(1)));
        if (theta < 0) t = -t;
        const Real c = Real(1) / std::sqrt(t * t + Real(1));
        const Real s = t * c;

        // Columns: new_p = c col_p - s e^{-i phi} col_q ; new_q = s col_p + c e^{-i phi} col_q
        for (Index k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const C akp = a(k, p);
          const C akq = a(k, q) * phase_conj;
          const C np = c * akp - s * akq;
          const C nq = s * akp + c * akq;
          a(k, p) = np;
          a(k, q) = nq;
          a(p, k) = std::conj(np);
          a(q, k) = std::conj(nq);
        }
        a(p, p) = C(app - t * r);
        a(q, q) = C(aqq + t * r);
        a(p, q) = a(q, p) = C(0);

        if (opt.compute_basis) {
          for (Index k = 0; k < n; ++k) {
            const C vkp = v(k, p);
            const C vkq = v(k, q) * phase_conj;
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
    converged = detail::off_diagonal_norm2(a) <= target;
  }
  if (!converged) {
    throw ConvergenceError("herm_eigen: Jacobi sweeps did not converge", n, opt.max_sweeps);
  }

  Spectrum<Real> out;
  out.values = a.diagonal().real();
  out.basis = std::move(v);
  detail::sort_descending(out.values, opt.compute_basis ? &out.basis : nullptr);
  return out;
}

template <typename Real>
RealVector<Real> herm_eigenvalues(const HermitianMatrix<Real>& m, int max_sweeps = 30) {
  return herm_eigen(m, JacobiOptions{max_sweeps, false}).values;
}

namespace detail {

/// Householder reduction to upper Hessenberg form (similarity transform,
/// transformations are not accumulated).
template <typename Real>
void hessenberg_reduce(ComplexMatrix<Real>& h) {
  using C = Complex<Real>;
  const Index n = h.rows();
  for (Index k = 0; k < n - 2; ++k) {
    const Index len = n - k - 1;
    ComplexVector<Real> x = h.col(k).segment(k + 1, len);
    const Real xnorm = x.norm();
    if (xnorm == Real(0)) continue;
    const C x0 = x(0);
    const C alpha = (std::abs(x0) == Real(0) ? C(1) : x0 / std::abs(x0)) * (-xnorm);
    ComplexVector<Real> u = x;
    u(0) -= alpha;
    const Real unorm = u.norm();
    if (unorm == Real(0)) continue;
    u /= unorm;
    // H <- P H P with P = I - 2 u u^dagger acting on rows/cols k+1..n-1.
    auto rows = h.bottomRows(len);
    const Eigen::Matrix<C, 1, Eigen::Dynamic> w = u.adjoint() * rows;
    rows.noalias() -= Real(2) * u * w;
    auto cols = h.rightCols(len);
    const ComplexVector<Real> z = cols * u;
    cols.noalias() -= Real(2) * z * u.adjoint();
    h(k + 1, k) = alpha;
    for (Index i = k + 2; i < n; ++i) h(i, k) = C(0);
  }
}

/// Eigenvalue of the 2x2 block [[a, b], [c, d]] closest to d.
template <typename Real>
Complex<Real> wilkinson_shift(Complex<Real> a, Complex<Real> b, Complex<Real> c, Complex<Real> d) {
  using C = Complex<Real>;
  const C tr_half = (a + d) / Real(2);
  const C det = a * d - b * c;
  const C disc = std::sqrt(tr_half * tr_half - det);
  const C l1 = tr_half + disc;
  const C l2 = tr_half - disc;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

}  // namespace detail

struct HessenbergQrOptions {
  /// QR steps allowed per eigenvalue before declaring non-convergence.
  int iterations_per_eigenvalue = 30;
  /// Subdiagonal h(i+1,i) is deflated once |h(i+1,i)| <= tol * (|h(i,i)| + |h(i+1,i+1)|).
  double deflation_tol = 1e-13;
};

/// All eigenvalues of a general square matrix: Householder reduction to
/// Hessenberg form, then single-shift complex QR with Wilkinson shifts and
/// deflation. Eigenvectors are not computed.
template <typename Real>
ComplexSpectrum<Real> general_eigen(const ComplexMatrix<Real>& m, const HessenbergQrOptions& opt = {}) {
  using C = Complex<Real>;
  require_square(m, "general_eigen");
  if (!all_finite(m)) throw DomainError("general_eigen: non-finite entry");
  const Index n = m.rows();
  ComplexMatrix<Real> h = m;
  detail::hessenberg_reduce(h);

  const Real tol = static_cast<Real>(opt.deflation_tol);
  const Real hnorm = std::max(h.norm(), std::numeric_limits<Real>::min());
  const long budget = static_cast<long>(opt.iterations_per_eigenvalue) * static_cast<long>(n);
  long steps = 0;
  int since_deflation = 0;

  ComplexVector<Real> values(n);
  Index hi = n - 1;
  while (hi >= 0) {
    Index lo = hi;
    while (lo > 0) {
      Real s = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (s == Real(0)) s = hnorm;
      if (std::abs(h(lo, lo - 1)) <= tol * s) {
        h(lo, lo - 1) = C(0);
        break;
      }
      --lo;
    }
    if (lo == hi) {
      values(hi) = h(hi, hi);
      --hi;
      since_deflation = 0;
      continue;
    }
    if (++steps > budget) {
      throw ConvergenceError("general_eigen: shifted QR did not converge", n,
                             opt.iterations_per_eigenvalue);
    }

    C mu;
    if (since_deflation > 0 && since_deflation % 10 == 0) {
      mu = h(hi, hi) + Real(1.5) * std::abs(h(hi, hi - 1));
    } else {
      mu = detail::wilkinson_shift<Real>(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }
    ++since_deflation;

    for (Index i = lo; i <= hi; ++i) h(i, i) -= mu;

    // H - mu I = Q R by Givens rotations, then H <- R Q + mu I.
    std::vector<std::pair<Real, C>> rot;
    rot.reserve(static_cast<std::size_t>(hi - lo));
    for (Index k = lo; k < hi; ++k) {
      const C x = h(k, k);
      const C y = h(k + 1, k);
      const Real ax = std::abs(x);
      const Real r = std::hypot(ax, std::abs(y));
      Real c;
      C s;
      if (r == Real(0)) {
        c = 1;
        s = C(0);
      } else if (ax == Real(0)) {
        c = 0;
        s = std::conj(y) / std::abs(y);
      } else {
        c = ax / r;
        s = (x / ax) * std::conj(y) / r;
      }
      rot.emplace_back(c, s);
      for (Index j = k; j <= hi; ++j) {
        const C u = h(k, j);
        const C w = h(k + 1, j);
        h(k, j) = c * u + s * w;
        h(k + 1, j) = -std::conj(s) * u + c * w;
      }
    }
    for (Index k = lo; k < hi; ++k) {
      const auto [c, s] = rot[static_cast<std::size_t>(k - lo)];
      for (Index i = lo; i <= std::min<Index>(k + 1, hi); ++i) {
        const C u = h(i, k);
        const C w = h(i, k + 1);
        h(i, k) = c * u + std::conj(s) * w;
        h(i, k + 1) = -s * u + c * w;
      }
    }
    for (Index i = lo; i <= hi; ++i) h(i, i) += mu;
  }

  std::vector<C> v(values.data(), values.data() + n);
  std::stable_sort(v.begin(), v.end(), [](const C& a, const C& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return std::abs(a) > std::abs(b);
  });
  ComplexSpectrum<Real> out;
  out.values = Eigen::Map<ComplexVector<Real>>(v.data(), n);
  return out;
}

}  // namespace gtlab
