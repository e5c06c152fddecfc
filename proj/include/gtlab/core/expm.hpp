#pragma once

#include <cmath>

#include "gtlab/core/eigen.hpp"
#include "gtlab/core/pauli.hpp"

namespace gtlab {

/// e^M for Hermitian M through its eigen-decomposition; the result is
/// Hermitian positive definite.
template <typename Real>
HermitianMatrix<Real> expm(const HermitianMatrix<Real>& m) {
  using std::exp;
  return herm_eigen(m).apply([](Real x) { return exp(x); });
}

/// e^M for a general square matrix by scaling and squaring: M / 2^s has
/// 1-norm at most 1/2, the Taylor series is summed until the next term is
/// below 1e-16 of the partial sum, then squared s times.
template <typename Real>
ComplexMatrix<Real> expm(const ComplexMatrix<Real>& m) {
  require_square(m, "expm");
  if (!all_finite(m)) throw DomainError("expm: non-finite entry");
  const Index n = m.rows();
  const Real norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm1 > Real(0.5)) {
    using std::ceil;
    using std::log2;
    s = static_cast<int>(ceil(log2(norm1 / Real(0.5))));
  }
  const ComplexMatrix<Real> scaled = m / std::ldexp(Real(1), s);
  ComplexMatrix<Real> sum = ComplexMatrix<Real>::Identity(n, n);
  ComplexMatrix<Real> term = ComplexMatrix<Real>::Identity(n, n);
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int k = 1; k < 64; ++k) {
    term = (term * scaled) / Real(k);
    sum += term;
    if (term.norm() <= eps * sum.norm()) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

/// Closed form e^A = cosh|a| I + sinh|a|/|a| A for traceless 2x2 A.
template <typename Real>
HermitianMatrix<Real> expm(const PauliVector<Real>& a) {
  using std::cosh;
  const Real r = a.norm();
  ComplexMatrix<Real> m = a.matrix().matrix() * sinhc(r);
  m(0, 0) += cosh(r);
  m(1, 1) += cosh(r);
  return HermitianMatrix<Real>(m);
}

/// Lie-Trotter product (e^{A/n} e^{B/n})^n by n explicit multiplications.
template <typename Real>
ComplexMatrix<Real> lie_trotter_product(const HermitianMatrix<Real>& a, const HermitianMatrix<Real>& b,
                                        int n) {
  if (n < 1) throw DomainError("lie_trotter_product: n must be >= 1");
  require_same_dim(a.matrix(), b.matrix(), "lie_trotter_product");
  const ComplexMatrix<Real> step =
      expm(a / Real(n)).matrix() * expm(b / Real(n)).matrix();
  ComplexMatrix<Real> out = step;
  for (int i = 1; i < n; ++i) out = out * step;
  return out;
}

}  // namespace gtlab
