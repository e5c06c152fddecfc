#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <Eigen/Geometry>

#include "gtlab/studies/studies.hpp"

using namespace gtlab;

TEST_CASE("Pauli ratio by quadrature against the chi_3 closed forms") {
  // E cosh(s chi_3) = e^{s^2/2} (1 + s^2); |a+b| is sqrt(2) chi_3. Traces carry a factor 2.
  const PauliQuadrature q = pauli_ratio_quadrature(1e-10);
  CHECK(q.radial_mean == doctest::Approx(2 * std::exp(0.5)).epsilon(1e-10));
  CHECK(q.numerator == doctest::Approx(2 * q.radial_mean * q.radial_mean).epsilon(1e-12));
  CHECK(q.numerator == doctest::Approx(8 * std::exp(1.0)).epsilon(1e-10));
  CHECK(q.denominator == doctest::Approx(6 * std::exp(1.0)).epsilon(1e-10));
  CHECK(std::abs(q.ratio - 4.0 / 3.0) <= 1e-8);
  CHECK_THROWS(pauli_ratio_quadrature(1e-12));
}

TEST_CASE("Pauli ratio by Monte Carlo") {
  const PauliRatioEstimate e = pauli_ratio_mc(1000000, RngStream(300, 0));
  CHECK(std::abs(e.estimate.ratio - 4.0 / 3.0) <= 3 * e.estimate.ratio_se);
  CHECK(e.estimate.ci.contains(e.estimate.ratio));
  CHECK(std::isfinite(e.estimate.ratio_se));
  CHECK(std::abs(e.cross_term_mean) <= 4 * e.cross_term_se);
  CHECK(e.golden_thompson_violations == 0);
  CHECK(e.estimate.ratio >= 1 - 3 * e.estimate.ratio_se);

  const PauliQuadrature q = pauli_ratio_quadrature();
  CHECK(e.estimate.ci.contains(q.ratio));
  CHECK_THROWS(pauli_ratio_mc(100, RngStream(1, 0)));
}

TEST_CASE("matrix route reproduces the vector route") {
  const PauliRatioEstimate v = pauli_ratio_mc(10000, RngStream(301, 0));
  const RatioEstimate m = pauli_ratio_matrix_route(10000, RngStream(301, 0));
  // same draws: denominators agree exactly up to rounding, numerators differ by the cross term
  CHECK(m.denominator_mean == doctest::Approx(v.estimate.denominator_mean).epsilon(1e-10));
  CHECK(std::abs(m.numerator_mean - v.estimate.numerator_mean - v.cross_term_mean) <=
        1e-10 * v.estimate.numerator_mean);
  CHECK(std::abs(m.ratio - v.estimate.ratio) <= 4 * std::hypot(m.ratio_se, v.estimate.ratio_se));
}

TEST_CASE("Pauli estimators are rotation invariant in distribution") {
  const Eigen::Matrix3d rot =
      Eigen::AngleAxisd(1.1, Eigen::Vector3d(0.3, -0.8, 0.5).normalized()).toRotationMatrix();
  const PauliRatioEstimate plain = pauli_ratio_mc(200000, RngStream(302, 0));
  const PauliRatioEstimate rotated = pauli_ratio_mc(200000, RngStream(302, 1), rot);
  const auto z = [](double a, double sa, double b, double sb) { return std::abs(a - b) / std::hypot(sa, sb); };
  CHECK(z(plain.estimate.numerator_mean, plain.estimate.numerator_se, rotated.estimate.numerator_mean,
          rotated.estimate.numerator_se) < 4);
  CHECK(z(plain.estimate.denominator_mean, plain.estimate.denominator_se, rotated.estimate.denominator_mean,
          rotated.estimate.denominator_se) < 4);
  CHECK(z(plain.estimate.ratio, plain.estimate.ratio_se, rotated.estimate.ratio, rotated.estimate.ratio_se) < 4);
  // the same stream with a rotation gives different trial values but the same denominator law
  const PauliRatioEstimate same_draws = pauli_ratio_mc(200000, RngStream(302, 0), rot);
  CHECK(same_draws.estimate.numerator_mean == doctest::Approx(plain.estimate.numerator_mean).epsilon(1e-12));
  CHECK(same_draws.estimate.denominator_mean != plain.estimate.denominator_mean);
}

TEST_CASE("hermitization ratio at small N") {
  const RatioEstimate two = hermitization_ratio(2, 2000, RngStream(303, 0));
  CHECK(std::isfinite(two.numerator_mean));
  CHECK(std::isfinite(two.denominator_mean));
  CHECK(two.ratio > 1);
  CHECK(two.dim == 2);

  const RatioEstimate sixteen = hermitization_ratio(16, 200, RngStream(303, 1));
  CHECK(sixteen.ratio > 1);
  CHECK(std::abs(sixteen.ratio - std::sqrt(2.0)) < 0.15);
  CHECK(sixteen.ci.contains(sixteen.ratio));

  HermitizationOptions real;
  real.real = true;
  CHECK(hermitization_ratio(16, 100, RngStream(303, 2), real).ratio > 1);
  CHECK_THROWS(hermitization_ratio(1, 100, RngStream(1, 0)));
  CHECK_THROWS(hermitization_ratio(16, 10, RngStream(1, 0)));
}

TEST_CASE("hermitization ratio is scale invariant") {
  HermitizationOptions scaled;
  scaled.scale = 3;
  const RatioEstimate a = hermitization_ratio(16, 50, RngStream(304, 0));
  const RatioEstimate b = hermitization_ratio(16, 50, RngStream(304, 0), scaled);
  CHECK(std::abs(a.ratio - b.ratio) <= 1e-9);
  CHECK(b.numerator_mean == doctest::Approx(3 * a.numerator_mean).epsilon(1e-9));
}
