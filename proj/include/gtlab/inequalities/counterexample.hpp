#pragma once

#include <string>
#include <vector>

#include "gtlab/core.hpp"
#include "gtlab/inequalities/gap_report.hpp"
#include "gtlab/random/rng.hpp"

namespace gtlab {

enum class CounterexampleTarget {
  /// Tr e^{A+B+C} <= |Tr(e^A e^B e^C)| over traceless 2x2 Hermitian triples.
  triple_gt,
  /// |Tr (ABC)^{2^k}| <= Tr(A^{2^k} B^{2^k} C^{2^k}) over 3x3 real symmetric triples.
  abc_trace,
};

struct Witness {
  bool found = false;
  CounterexampleTarget target = CounterexampleTarget::triple_gt;
  int k = 1;
  long trial = -1;  // trial index of the witness, or trials used when not found
  std::vector<ComplexMatrix<double>> matrices;
  /// Sides of the would-be inequality lhs <= rhs; a witness has lhs > rhs.
  GapReport gap;
};

namespace detail {

inline ComplexMatrix<double> random_real_symmetric(Index n, RngStream& rng) {
  ComplexMatrix<double> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= i; ++j) {
      const double v = rng.std_normal();
      m(i, j) = m(j, i) = Complex<double>(v, 0);
    }
  return m;
}

inline GapReport triple_gt_sides(const PauliVector<double>& a, const PauliVector<double>& b,
                                 const PauliVector<double>& c) {
  const double lhs = expm(a + b + c).trace();
  const double rhs = std::abs(Complex<double>((expm(a).matrix() * expm(b).matrix() * expm(c).matrix()).trace()));
  return GapReport::make(lhs, rhs, "Eq.4.1d");
}

inline GapReport abc_trace_sides(const ComplexMatrix<double>& a, const ComplexMatrix<double>& b,
                                 const ComplexMatrix<double>& c, int k) {
  ComplexMatrix<double> abc = a * b * c;
  ComplexMatrix<double> ap = a, bp = b, cp = c;
  for (int i = 0; i < k; ++i) {
    abc = abc * abc;
    ap = ap * ap;
    bp = bp * bp;
    cp = cp * cp;
  }
  const double lhs = std::abs(Complex<double>(abc.trace()));
  const double rhs = (ap * bp * cp).trace().real();
  return GapReport::make(lhs, rhs, "ABC trace k=" + std::to_string(k));
}

}  // namespace detail

/// Random search for a violation of a three-matrix extension that is known
/// to fail. Trial i draws from rng.child(i) with standard Gaussian
/// coefficients; the first trial whose lhs exceeds rhs beyond tolerance is
/// returned. A witness is a result, not an error.
inline Witness counterexample_search(CounterexampleTarget target, const RngStream& rng, long budget, int k = 1,
                                     bool zero_third = false) {
  if (budget < 1) throw DomainError("counterexample_search: budget must be >= 1");
  if (target == CounterexampleTarget::abc_trace && (k < 1 || k > 10)) {
    throw DomainError("counterexample_search: k must be in [1, 10]");
  }
  Witness w;
  w.target = target;
  w.k = k;
  for (long t = 0; t < budget; ++t) {
    RngStream s = rng.child(static_cast<std::uint64_t>(t));
    if (target == CounterexampleTarget::triple_gt) {
      const PauliVector<double> a(s.std_normal(), s.std_normal(), s.std_normal());
      const PauliVector<double> b(s.std_normal(), s.std_normal(), s.std_normal());
      PauliVector<double> c(s.std_normal(), s.std_normal(), s.std_normal());
      if (zero_third) c = PauliVector<double>();
      const GapReport g = detail::triple_gt_sides(a, b, c);
      if (!g.pass) {
        w.found = true;
        w.trial = t;
        w.matrices = {a.matrix().matrix(), b.matrix().matrix(), c.matrix().matrix()};
        w.gap = g;
        return w;
      }
    } else {
      const ComplexMatrix<double> a = detail::random_real_symmetric(3, s);
      const ComplexMatrix<double> b = detail::random_real_symmetric(3, s);
      ComplexMatrix<double> c = detail::random_real_symmetric(3, s);
      if (zero_third) c = ComplexMatrix<double>::Identity(3, 3);
      const GapReport g = detail::abc_trace_sides(a, b, c, k);
      if (!g.pass) {
        w.found = true;
        w.trial = t;
        w.matrices = {a, b, c};
        w.gap = g;
        return w;
      }
    }
  }
  w.trial = budget;
  return w;
}

}  // namespace gtlab
