#pragma once

#include <cmath>

#include "gtlab/core/matrix.hpp"

namespace gtlab {

/// Traceless 2x2 Hermitian matrix a1 s1 + a2 s2 + a3 s3 held as its real
/// coordinate vector. A^2 = |a|^2 I.
template <typename Real>
class PauliVector {
 public:
  using Vec3 = Eigen::Matrix<Real, 3, 1>;

  PauliVector() : a_(Vec3::Zero()) {}
  PauliVector(Real a1, Real a2, Real a3) : a_(a1, a2, a3) {}
  explicit PauliVector(const Vec3& a) : a_(a) {}

  /// Coordinates of the traceless part of a 2x2 Hermitian matrix.
  static PauliVector from_matrix(const HermitianMatrix<Real>& h) {
    if (h.dim() != 2) throw DimensionError("PauliVector::from_matrix: expected 2x2");
    const auto& m = h.matrix();
    return PauliVector(m(0, 1).real(), -m(0, 1).imag(), (m(0, 0).real() - m(1, 1).real()) / Real(2));
  }

  const Vec3& coords() const noexcept { return a_; }
  Real operator[](int i) const { return a_(i); }
  Real norm() const { return a_.norm(); }
  Real squared_norm() const { return a_.squaredNorm(); }
  Real dot(const PauliVector& o) const { return a_.dot(o.a_); }

  PauliVector operator+(const PauliVector& o) const { return PauliVector(Vec3(a_ + o.a_)); }
  PauliVector operator-(const PauliVector& o) const { return PauliVector(Vec3(a_ - o.a_)); }
  PauliVector operator-() const { return PauliVector(Vec3(-a_)); }
  PauliVector operator*(Real s) const { return PauliVector(Vec3(a_ * s)); }
  friend PauliVector operator*(Real s, const PauliVector& p) { return p * s; }

  HermitianMatrix<Real> matrix() const {
    using C = Complex<Real>;
    ComplexMatrix<Real> m(2, 2);
    m << C(a_(2), 0), C(a_(0), -a_(1)), C(a_(0), a_(1)), C(-a_(2), 0);
    return HermitianMatrix<Real>(m);
  }

 private:
  Vec3 a_;
};

template <typename Real>
HermitianMatrix<Real> pauli_sigma(int which) {
  using C = Complex<Real>;
  ComplexMatrix<Real> m(2, 2);
  switch (which) {
    case 1: m << C(0), C(1), C(1), C(0); break;
    case 2: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case 3: m << C(1), C(0), C(0), C(-1); break;
    default: throw DomainError("pauli_sigma: index must be 1, 2 or 3");
  }
  return HermitianMatrix<Real>(m);
}

/// sinh(r)/r, by its Taylor series below r = 1e-4.
template <typename Real>
Real sinhc(Real r) {
  using std::abs;
  if (abs(r) < Real(1e-4)) {
    const Real r2 = r * r;
    return Real(1) + r2 / Real(6) * (Real(1) + r2 / Real(20));
  }
  using std::sinh;
  return sinh(r) / r;
}

}  // namespace gtlab
