#include "gtlab/studies/studies.hpp"

#include <cmath>

#include "gtlab/inequalities/gap_report.hpp"
#include "gtlab/numerics/parallel.hpp"
#include "gtlab/numerics/quadrature.hpp"
#include "gtlab/random/ensembles.hpp"

namespace gtlab {

namespace {

RatioEstimate ratio_from(const RunningCovariance& c, long trials) {
  RatioEstimate r;
  r.trials = trials;
  r.numerator_mean = c.mean_x();
  r.denominator_mean = c.mean_y();
  r.numerator_se = std::sqrt(c.var_x() / double(trials));
  r.denominator_se = std::sqrt(c.var_y() / double(trials));
  r.ratio = r.numerator_mean / r.denominator_mean;
  r.ratio_se = c.ratio_standard_error();
  r.ci = {r.ratio - kZ95 * r.ratio_se, r.ratio + kZ95 * r.ratio_se};
  return r;
}

struct PauliPair {
  PauliVector<double> a, b;
};

PauliPair draw_pair(const RngStream& stream, std::int64_t i) {
  RngStream s = stream.child(static_cast<std::uint64_t>(i));
  PauliPair p{sample_pauli_gaussian(s), sample_pauli_gaussian(s)};
  return p;
}

}  // namespace

PauliRatioEstimate pauli_ratio_mc(long trials, const RngStream& stream, const std::optional<Eigen::Matrix3d>& rotation) {
  if (trials < 10000) throw DomainError("pauli_ratio_mc: need at least 1e4 trials");
  struct Row {
    double num, den, cross;
    bool violation;
  };
  const auto rows = map_trials(trials, [&](std::int64_t i) {
    PauliPair p = draw_pair(stream, i);
    if (rotation) {
      p.a = PauliVector<double>(Eigen::Vector3d(*rotation * p.a.coords()));
      p.b = PauliVector<double>(Eigen::Vector3d(*rotation * p.b.coords()));
    }
    const double na = p.a.norm(), nb = p.b.norm();
    const double num = 2.0 * std::cosh(na) * std::cosh(nb);
    // sinh|a| sinh|b| cos(theta) = (a.b) sinhc|a| sinhc|b|
    const double cross = 2.0 * p.a.dot(p.b) * sinhc(na) * sinhc(nb);
    const double den = 2.0 * std::cosh((p.a + p.b).norm());
    const GapReport g = GapReport::make(den, num + cross, "Eq.1");
    return Row{num, den, cross, !g.pass};
  });
  RunningCovariance c;
  RunningStats cross;
  PauliRatioEstimate out;
  for (const Row& r : rows) {
    c.push(r.num, r.den);
    cross.push(r.cross);
    out.golden_thompson_violations += r.violation;
  }
  out.estimate = ratio_from(c, trials);
  out.cross_term_mean = cross.mean();
  out.cross_term_se = cross.standard_error();
  return out;
}

RatioEstimate pauli_ratio_matrix_route(long trials, const RngStream& stream) {
  if (trials < 1) throw DomainError("pauli_ratio_matrix_route: need at least one trial");
  struct Row {
    double num, den;
  };
  const auto rows = map_trials(trials, [&](std::int64_t i) {
    const PauliPair p = draw_pair(stream, i);
    const HermitianMatrix<double> a = p.a.matrix(), b = p.b.matrix();
    const double num = real_trace<double>(ComplexMatrix<double>(expm(a).matrix() * expm(b).matrix()));
    const double den = expm(a + b).trace();
    return Row{num, den};
  });
  RunningCovariance c;
  for (const Row& r : rows) c.push(r.num, r.den);
  return ratio_from(c, trials);
}

PauliQuadrature pauli_ratio_quadrature(double tol) {
  if (!(tol >= 1e-10)) throw DomainError("pauli_ratio_quadrature: tol must be >= 1e-10");
  const double chi3 = std::sqrt(2.0 / M_PI);
  auto radial = [&](double s) {
    return integrate_adaptive([&](double r) { return chi3 * r * r * std::exp(-r * r / 2.0) * std::cosh(s * r); }, 0.0,
                              50.0, 0.0, tol * 1e-2);
  };
  const QuadratureResult num = radial(1.0);
  const QuadratureResult den = radial(std::sqrt(2.0));
  if (!num.converged || !den.converged) throw ConvergenceError("pauli_ratio_quadrature: no convergence", 3, 4000);
  PauliQuadrature out;
  out.radial_mean = num.value;
  out.numerator = 2.0 * num.value * num.value;
  out.denominator = 2.0 * den.value;
  out.ratio = out.numerator / out.denominator;
  out.error = out.ratio * (2.0 * num.error / num.value + den.error / den.value);
  return out;
}

RatioEstimate hermitization_ratio(Index n, long trials, const RngStream& stream, const HermitizationOptions& options) {
  if (n < 2) throw DomainError("hermitization_ratio: N must be >= 2");
  if (trials < 50) throw DomainError("hermitization_ratio: need at least 50 trials");
  if (!(options.scale > 0)) throw DomainError("hermitization_ratio: scale must be > 0");
  constexpr int kMaxRetries = 8;
  struct Row {
    double num, den;
    int retries;
  };
  const auto rows = map_trials(trials, [&](std::int64_t i) {
    const RngStream base = stream.child(static_cast<std::uint64_t>(i));
    for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
      RngStream s = attempt == 0 ? base : base.child(static_cast<std::uint64_t>(attempt));
      const ComplexMatrix<double> a =
          options.scale * (options.real ? ginibre_real<double>(n, s) : ginibre_complex<double>(n, s));
      try {
        // HermitianMatrix keeps (A + A^dagger)/2.
        const double num = herm_eigenvalues(HermitianMatrix<double>(a))(0);
        const double den = general_eigen(a).max_real_part();
        return Row{num, den, attempt};
      } catch (const ConvergenceError&) {
      }
    }
    throw ConvergenceError("hermitization_ratio: eigensolver failed on every redraw", n, kMaxRetries);
  });
  RunningCovariance c;
  int retries = 0;
  for (const Row& r : rows) {
    c.push(r.num, r.den);
    retries += r.retries;
  }
  RatioEstimate out = ratio_from(c, trials);
  out.dim = n;
  out.retries = retries;
  return out;
}

}  // namespace gtlab
