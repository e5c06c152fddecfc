#pragma once

#include <optional>
#include <string>
#include <variant>

#include "gtlab/core.hpp"
#include "gtlab/random/rng.hpp"

namespace gtlab {

enum class HaarMethod { qr, polar };

struct EnsembleSpec {
  enum class Kind { ginibre_complex, ginibre_real, gue, goe, haar_unitary, pauli_gaussian };
  Kind kind = Kind::ginibre_complex;
  Index dim = 2;
  /// Ginibre: keep the first k columns. Haar: keep the top-left k x k block.
  std::optional<Index> block;
  HaarMethod haar_method = HaarMethod::qr;

  void validate() const {
    if (dim < 1) throw DomainError("EnsembleSpec: dim must be >= 1");
    if (block) {
      const bool blockable = kind == Kind::ginibre_complex || kind == Kind::ginibre_real ||
                             kind == Kind::haar_unitary;
      if (!blockable) throw DomainError("EnsembleSpec: block is only meaningful for Ginibre and Haar");
      if (*block < 1 || *block > dim) throw DomainError("EnsembleSpec: block must satisfy 1 <= k <= N");
    }
  }
};

/// Entries with independent real and imaginary parts of variance 1/2 each.
template <typename Real = double>
ComplexMatrix<Real> ginibre_complex(Index rows, Index cols, RngStream& rng) {
  ComplexMatrix<Real> x(rows, cols);
  const double s = std::sqrt(0.5);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      const double re = rng.std_normal() * s;
      const double im = rng.std_normal() * s;
      x(i, j) = Complex<Real>(Real(re), Real(im));
    }
  return x;
}

template <typename Real = double>
ComplexMatrix<Real> ginibre_complex(Index n, RngStream& rng) {
  return ginibre_complex<Real>(n, n, rng);
}

template <typename Real = double>
ComplexMatrix<Real> ginibre_real(Index rows, Index cols, RngStream& rng) {
  ComplexMatrix<Real> x(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) x(i, j) = Complex<Real>(Real(rng.std_normal()), Real(0));
  return x;
}

template <typename Real = double>
ComplexMatrix<Real> ginibre_real(Index n, RngStream& rng) {
  return ginibre_real<Real>(n, n, rng);
}

/// (X + X^dagger)/2 of a complex Ginibre draw: diagonal variance 1/2,
/// off-diagonal E|M_ij|^2 = 1/2, so E Tr M^2 = N^2/2.
template <typename Real = double>
HermitianMatrix<Real> gue(Index n, RngStream& rng) {
  return HermitianMatrix<Real>(ginibre_complex<Real>(n, rng));
}

/// (X + X^T)/2 of a real Ginibre draw: E Tr M^2 = N(N+1)/2.
template <typename Real = double>
HermitianMatrix<Real> goe(Index n, RngStream& rng) {
  return HermitianMatrix<Real>(ginibre_real<Real>(n, rng));
}

struct HaarDraw {
  ComplexMatrix<double> u;
  int retries = 0;
};

namespace detail {

/// Gram-Schmidt with one reorthogonalization pass. Normalizing by the column
/// norm makes every R diagonal entry positive real, which is the phase
/// convention that makes the Q factor of a Ginibre draw Haar distributed.
/// Returns false when a column is numerically dependent.
inline bool gram_schmidt(ComplexMatrix<double>& x) {
  const Index n = x.cols();
  for (Index j = 0; j < n; ++j) {
    const double original = x.col(j).norm();
    for (int pass = 0; pass < 2; ++pass) {
      for (Index i = 0; i < j; ++i) {
        const Complex<double> r = x.col(i).dot(x.col(j));  // conj(q_i) . x_j
        x.col(j) -= r * x.col(i);
      }
    }
    const double nrm = x.col(j).norm();
    if (!(nrm > 1e-10 * original) || nrm == 0.0) return false;
    x.col(j) /= nrm;
  }
  return true;
}

/// (X X^dagger)^{-1/2} X. Returns false when X is numerically singular.
inline bool polar_unitary(const ComplexMatrix<double>& x, ComplexMatrix<double>& out) {
  const Spectrum<double> s = herm_eigen(HermitianMatrix<double>(x * x.adjoint()));
  if (!(s.min() > 1e-20 * s.max())) return false;
  const HermitianMatrix<double> inv_sqrt = s.apply([](double v) { return 1.0 / std::sqrt(v); });
  out = inv_sqrt.matrix() * x;
  return true;
}

}  // namespace detail

/// Haar-distributed U(N) element from a complex Ginibre draw. A numerically
/// singular draw is replaced by one from the next child stream.
inline HaarDraw haar_unitary(Index n, HaarMethod method, RngStream& rng) {
  if (n < 1) throw DomainError("haar_unitary: N must be >= 1");
  HaarDraw out;
  RngStream local = rng;
  for (int attempt = 0; attempt < 64; ++attempt) {
    ComplexMatrix<double> x = ginibre_complex<double>(n, local);
    bool ok;
    if (method == HaarMethod::qr) {
      ok = detail::gram_schmidt(x);
      if (ok) out.u = std::move(x);
    } else {
      ok = detail::polar_unitary(x, out.u);
    }
    if (ok) {
      out.retries = attempt;
      rng = local;
      return out;
    }
    local = rng.child(static_cast<std::uint64_t>(attempt) + 1);
  }
  throw ConvergenceError("haar_unitary: repeated singular draws", n, 64);
}

inline PauliVector<double> sample_pauli_gaussian(RngStream& rng) {
  const double a1 = rng.std_normal();
  const double a2 = rng.std_normal();
  const double a3 = rng.std_normal();
  return PauliVector<double>(a1, a2, a3);
}

using SampledMatrix = std::variant<ComplexMatrix<double>, HermitianMatrix<double>, PauliVector<double>>;

inline SampledMatrix sample_matrix(const EnsembleSpec& spec, RngStream& rng) {
  spec.validate();
  using K = EnsembleSpec::Kind;
  const Index n = spec.dim;
  switch (spec.kind) {
    case K::ginibre_complex: return ginibre_complex<double>(n, spec.block.value_or(n), rng);
    case K::ginibre_real: return ginibre_real<double>(n, spec.block.value_or(n), rng);
    case K::gue: return gue<double>(n, rng);
    case K::goe: return goe<double>(n, rng);
    case K::haar_unitary: {
      ComplexMatrix<double> u = haar_unitary(n, spec.haar_method, rng).u;
      if (spec.block) return ComplexMatrix<double>(u.topLeftCorner(*spec.block, *spec.block));
      return u;
    }
    case K::pauli_gaussian: return sample_pauli_gaussian(rng);
  }
  throw DomainError("sample_matrix: unknown ensemble");
}

}  // namespace gtlab
