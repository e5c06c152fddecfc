#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gtlab {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using ComplexMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using ComplexVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

/// Raised when an iterative solver exhausts its budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, Index dim, int budget)
      : std::runtime_error(what + " (dim=" + std::to_string(dim) +
                           ", budget=" + std::to_string(budget) + ")"),
        dim_(dim),
        budget_(budget) {}

  Index dim() const noexcept { return dim_; }
  int budget() const noexcept { return budget_; }

 private:
  Index dim_;
  int budget_;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside an operation's domain (indefinite argument, bad grid, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      using std::isfinite;
      const auto z = m(i, j);
      if constexpr (Eigen::NumTraits<typename Derived::Scalar>::IsComplex) {
        if (!isfinite(z.real()) || !isfinite(z.imag())) return false;
      } else {
        if (!isfinite(z)) return false;
      }
    }
  }
  return true;
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(who) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

template <typename DerivedA, typename DerivedB>
void require_same_dim(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                      const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(who) + ": dimension mismatch " + std::to_string(a.rows()) +
                         " vs " + std::to_string(b.rows()));
  }
}

/// Dense Hermitian matrix. Construction symmetrizes (M + M^dagger)/2, so the
/// stored entries satisfy entry(i,j) == conj(entry(j,i)) bit-for-bit.
template <typename Real>
class HermitianMatrix {
 public:
  using Scalar = Complex<Real>;
  using Matrix = ComplexMatrix<Real>;

  HermitianMatrix() = default;

  template <typename Derived>
  explicit HermitianMatrix(const Eigen::MatrixBase<Derived>& m) {
    require_square(m, "HermitianMatrix");
    Matrix c = m.template cast<Scalar>();
    if (!all_finite(c)) throw DomainError("HermitianMatrix: non-finite entry");
    m_ = (c + c.adjoint()) / Real(2);
  }

  static HermitianMatrix zero(Index n) { return HermitianMatrix(Matrix::Zero(n, n)); }
  static HermitianMatrix identity(Index n) { return HermitianMatrix(Matrix::Identity(n, n)); }

  template <typename Derived>
  static HermitianMatrix diagonal(const Eigen::MatrixBase<Derived>& d) {
    Matrix m = Matrix::Zero(d.size(), d.size());
    for (Index i = 0; i < d.size(); ++i) m(i, i) = Scalar(d(i));
    return HermitianMatrix(m);
  }

  Index dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  operator const Matrix&() const noexcept { return m_; }
  Scalar operator()(Index i, Index j) const { return m_(i, j); }

  Real trace() const { return m_.trace().real(); }

  HermitianMatrix operator+(const HermitianMatrix& o) const {
    require_same_dim(m_, o.m_, "HermitianMatrix::operator+");
    return HermitianMatrix(m_ + o.m_);
  }
  HermitianMatrix operator-(const HermitianMatrix& o) const {
    require_same_dim(m_, o.m_, "HermitianMatrix::operator-");
    return HermitianMatrix(m_ - o.m_);
  }
  HermitianMatrix operator-() const { return HermitianMatrix(-m_); }
  HermitianMatrix operator*(Real s) const { return HermitianMatrix(m_ * s); }
  friend HermitianMatrix operator*(Real s, const HermitianMatrix& h) { return h * s; }
  HermitianMatrix operator/(Real s) const { return HermitianMatrix(m_ / s); }

  /// Adds c to the diagonal.
  HermitianMatrix shifted(Real c) const {
    return HermitianMatrix(m_ + Matrix::Identity(dim(), dim()) * Scalar(c));
  }

  /// U M U^dagger for unitary U.
  template <typename Derived>
  HermitianMatrix conjugated(const Eigen::MatrixBase<Derived>& u) const {
    return HermitianMatrix(u * m_ * u.adjoint());
  }

  HermitianMatrix squared() const { return HermitianMatrix(m_ * m_); }

 private:
  Matrix m_;
};

template <typename Real>
ComplexMatrix<Real> commutator(const ComplexMatrix<Real>& a, const ComplexMatrix<Real>& b) {
  return a * b - b * a;
}

/// Real trace of a matrix whose trace is known to be real. The imaginary
/// residue must be below rel_tol * |Re tr|; anything larger is an error.
template <typename Real>
Real real_trace(const ComplexMatrix<Real>& m, Real rel_tol = Real(1e-10)) {
  const Complex<Real> t = m.trace();
  using std::abs;
  const Real scale = std::max(abs(t.real()), std::numeric_limits<Real>::min());
  if (abs(t.imag()) > rel_tol * scale && abs(t.imag()) > Real(64) * std::numeric_limits<Real>::epsilon()) {
    throw DomainError("real_trace: imaginary residue " + std::to_string(double(t.imag())) +
                      " exceeds tolerance for trace " + std::to_string(double(t.real())));
  }
  return t.real();
}

}  // namespace gtlab
