#pragma once

#include <cmath>

#include "gtlab/core.hpp"
#include "gtlab/inequalities/gap_report.hpp"

namespace gtlab {

struct PauliReduction {
  /// cosh|a+b| <= cosh|a| cosh|b| - cos(theta) sinh|a| sinh|b|, cos(theta) = -a.b/(|a||b|).
  GapReport cosh_form;
  /// |a|^2 + |b|^2 - 2|a||b| cos(theta) <= |c|^2 with cosh|c| the right side above.
  GapReport law_of_cosines;
  /// |vector side - Tr expm / 2| for each side of the cosh form.
  double lhs_matrix_deviation = 0;
  double rhs_matrix_deviation = 0;
  bool consistent = true;
};

inline constexpr double kPauliRouteTolerance = 1e-10;

/// The 2x2 Golden-Thompson inequality evaluated from the coordinate vectors,
/// cross-checked against half-traces of the corresponding matrix exponentials.
template <typename Real>
PauliReduction pauli_reduce(const PauliVector<Real>& a, const PauliVector<Real>& b) {
  using std::cosh;
  const Real na = a.norm();
  const Real nb = b.norm();
  const Real dot = a.dot(b);
  const Real lhs = cosh((a + b).norm());
  // -cos(theta) sinh|a| sinh|b| = (a.b) sinhc|a| sinhc|b|, defined for zero vectors.
  const Real rhs = cosh(na) * cosh(nb) + dot * sinhc(na) * sinhc(nb);

  PauliReduction out;
  out.cosh_form = GapReport::make(double(lhs), double(rhs), "Eq.1a");

  using std::acosh;
  const Real c = acosh(std::max(rhs, Real(1)));
  const Real cosines = na * na + nb * nb + Real(2) * dot;  // -2|a||b|cos(theta) = 2 a.b
  out.law_of_cosines = GapReport::make(double(cosines), double(c * c), "Eq.1aA");

  const Real lhs_m = expm(a + b).trace() / Real(2);
  const Real rhs_m = real_trace<Real>(ComplexMatrix<Real>(expm(a).matrix() * expm(b).matrix())) / Real(2);
  out.lhs_matrix_deviation = double(std::abs(lhs - lhs_m));
  out.rhs_matrix_deviation = double(std::abs(rhs - rhs_m));
  out.consistent = out.lhs_matrix_deviation <= kPauliRouteTolerance * std::max(1.0, double(std::abs(lhs))) &&
                   out.rhs_matrix_deviation <= kPauliRouteTolerance * std::max(1.0, double(std::abs(rhs)));
  return out;
}

/// 1/sinh(beta) <= 1/beta for beta > 0.
inline GapReport oscillator_bound(double beta) {
  if (!(beta > 0)) throw DomainError("oscillator_bound: beta must be > 0");
  return GapReport::make(1.0 / std::sinh(beta), 1.0 / beta, "Eq.1b beta=" + std::to_string(beta));
}

}  // namespace gtlab
