#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gtlab/core.hpp"
#include "gtlab/inequalities/counterexample.hpp"
#include "gtlab/inequalities/dyson.hpp"
#include "gtlab/inequalities/equality_scan.hpp"
#include "gtlab/inequalities/majorization.hpp"
#include "gtlab/inequalities/trace_inequalities.hpp"
#include "gtlab/inequalities/two_by_two.hpp"
#include "gtlab/random/ensembles.hpp"

using namespace gtlab;
using CMat = ComplexMatrix<double>;
using HMat = HermitianMatrix<double>;
using RVec = RealVector<double>;

namespace {

HMat diag(std::initializer_list<double> v) {
  RVec d(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) d(i++) = x;
  return HMat::diagonal(d);
}

HMat conj(const CMat& u, const HMat& a) { return HMat(CMat(u * a.matrix() * u.adjoint())); }

HMat positive_definite(Index n, RngStream& rng) { return expm(gue<double>(n, rng)); }

}  // namespace

TEST_CASE("gt_gap on closed-form 2x2 instances") {
  const GapReport commuting = gt_gap(diag({1, -2, 0.5}), diag({0.3, 0.7, -1}));
  CHECK(std::abs(commuting.margin) < 1e-10);
  const GapReport r = gt_gap(pauli_sigma<double>(3), pauli_sigma<double>(1));
  CHECK(r.lhs == doctest::Approx(2 * std::cosh(std::sqrt(2.0))).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(2 * std::cosh(1.0) * std::cosh(1.0)).epsilon(1e-12));
  CHECK(r.lhs == doctest::Approx(4.3564).epsilon(1e-4));
  CHECK(r.rhs == doctest::Approx(4.7622).epsilon(1e-4));
  CHECK(r.pass);
  CHECK_THROWS_AS(gt_gap(HMat::zero(2), HMat::zero(3)), DimensionError);
}

TEST_CASE("gt_gap holds on random GUE pairs") {
  RngStream root(100, 0);
  long failures = 0;
  for (long t = 0; t < 10000; ++t) {
    RngStream rng = root.child(t);
    const Index n = 2 + t % 7;
    if (!gt_gap(gue<double>(n, rng), gue<double>(n, rng)).pass) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("gt_gap margin is unitarily invariant and scales under shifts") {
  RngStream rng(101, 0);
  for (int t = 0; t < 100; ++t) {
    const HMat a = gue<double>(4, rng), b = gue<double>(4, rng);
    const CMat u = haar_unitary(4, HaarMethod::qr, rng).u;
    const GapReport g = gt_gap(a, b);
    const GapReport gu = gt_gap(conj(u, a), conj(u, b));
    CHECK(std::abs(g.margin - gu.margin) <= 1e-9 * std::max(1.0, g.rhs));
    const double c = 0.7;
    const GapReport gs = gt_gap(a.shifted(c), b);
    CHECK(std::abs(gs.margin / std::exp(c) - g.margin) <= 1e-9 * std::max(1.0, g.rhs));
  }
}

TEST_CASE("word_trace_bound equality cases") {
  RngStream rng(102, 0);
  const CMat x = ginibre_complex<double>(4, rng);
  for (int n = 1; n <= 3; ++n) {
    const GapReport r = word_trace_bound(x, WordSpec::alternating(n));
    CHECK(std::abs(r.margin) <= 1e-10 * r.rhs);
  }
  const CMat d = diag({0.5, -1.3, 2}).matrix();
  for (unsigned code = 0; code < 16; ++code) {
    const GapReport r = word_trace_bound(d, WordSpec::from_code(code, 2));
    CHECK(std::abs(r.margin) <= 1e-10 * r.rhs);
  }
  CHECK(WordSpec::parse("XDDX").half_length() == 2);
  CHECK_THROWS(WordSpec::parse("XY"));
  CHECK_THROWS(WordSpec::parse("X"));
}

TEST_CASE("Dyson lemmas hold on random draws") {
  RngStream rng(103, 0);
  long failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const CMat x = ginibre_complex<double>(3, rng), y = ginibre_complex<double>(3, rng);
    failures += !cauchy_trace_check(x, y).pass;
    failures += !word_trace_bound(x, WordSpec::from_code(unsigned(t) % 64u, 3)).pass;
    const HMat a = gue<double>(3, rng), b = gue<double>(3, rng);
    for (int k = 1; k <= 3; ++k) failures += !lemma3_check(a, b, k).pass;
  }
  CHECK(failures == 0);
  CHECK_THROWS_AS(lemma3_check(HMat::zero(2), HMat::zero(2), 0), DomainError);
}

TEST_CASE("weyl_polya_check examples") {
  CMat nil = CMat::Zero(2, 2);
  nil(0, 1) = 1;
  const GapReport r = weyl_polya_check(nil, 2.0, 2);
  CHECK(r.rhs == doctest::Approx(1.0));
  CHECK(std::abs(r.lhs) < 1e-12);
  CHECK(r.pass);

  RngStream rng(104, 0);
  const HMat h = gue<double>(5, rng);
  for (Index k = 1; k <= 5; ++k) {
    const GapReport e = weyl_polya_check<double>(h.matrix(), 2.0, k);
    CHECK(std::abs(e.margin) <= 1e-9 * e.rhs);
  }
  CHECK_THROWS_AS(weyl_polya_check(nil, -1.0, 1), PreconditionError);
  CHECK_THROWS_AS(weyl_polya_check(nil, 2.0, 3), PreconditionError);
}

TEST_CASE("Weyl chain and trace powers hold on Ginibre draws") {
  RngStream rng(105, 0);
  long failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const CMat x = ginibre_complex<double>(4, rng);
    for (Index k = 1; k <= 4; ++k) failures += !weyl_polya_check(x, 1.0, k).pass;
    for (int s = 1; s <= 3; ++s) {
      const auto [h1, h2] = weyl_power_chain(x, s);
      failures += !h1.pass + !h2.pass;
      failures += !trace_power_check(x, s).pass;
      failures += !phi_power_check(x, SpectralFunctional::top_k(2), s).pass;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("Karamata checks") {
  const RVec a = (RVec(3) << 3, 1, -1).finished();
  const MajorizationPair<double> same(a, a);
  const GapReport eq = karamata_check(same, [](double x) { return std::exp(x); });
  CHECK(std::abs(eq.margin) < 1e-12);

  CHECK_THROWS_AS(MajorizationPair<double>(a, (RVec(3) << 4, 0, -1).finished()), PreconditionError);
  CHECK_THROWS_AS(MajorizationPair<double>(a, (RVec(3) << 0, 1, -1).finished()), PreconditionError);

  RngStream rng(106, 0);
  long failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const MajorizationPair<double> p = weyl_log_pair(ginibre_complex<double>(4, rng));
    failures += !karamata_check(p, [](double x) { return std::exp(2 * x); }).pass;
    failures += !karamata_check(p, [](double x) { return std::max(x, 0.0); }).pass;
  }
  CHECK(failures == 0);
}

TEST_CASE("SpectralFunctional top-N equals Schatten 1 on positive definite input") {
  RngStream rng(107, 0);
  const RVec ev = herm_eigenvalues(positive_definite(5, rng));
  CHECK(SpectralFunctional::top_k(5)(ev) == doctest::Approx(SpectralFunctional::schatten_power(1)(ev)));
  CHECK(SpectralFunctional::trace()(ev) == doctest::Approx(ev.sum()));
}

TEST_CASE("norm_variant_gap equalities") {
  RngStream rng(108, 0);
  const HMat a = gue<double>(4, rng), b = gue<double>(4, rng);
  const GapReport s1 = norm_variant_gap(a, b, NormVariant::schatten(1));
  const GapReport gt = gt_gap(a, b);
  CHECK(s1.lhs == doctest::Approx(gt.lhs).epsilon(1e-10));
  // the trace norm of e^A e^B bounds its trace, so rhs >= Tr e^A e^B
  CHECK(s1.rhs >= gt.rhs * (1 - 1e-12));

  const HMat da = diag({0.2, -1, 3, 0.5}), db = diag({1, 1.5, -0.5, 0});
  const GapReport lm = norm_variant_gap(da, db, NormVariant::log_metric());
  CHECK(std::abs(lm.margin) < 1e-10);
  CHECK(lm.lhs == doctest::Approx((da - db).matrix().norm()));

  CHECK_THROWS_AS(norm_variant_gap(a, b, NormVariant::alt(2, 1)), DomainError);
  CHECK_THROWS_AS(norm_variant_gap(positive_definite(4, rng), positive_definite(4, rng), NormVariant::alt(0.5, 1)),
                  DomainError);
}

TEST_CASE("norm variants hold on random GUE pairs") {
  RngStream rng(109, 0);
  const std::vector<NormVariant> variants = {
      NormVariant::schatten(1),    NormVariant::schatten(2),    NormVariant::schatten(4),
      NormVariant::schatten(INFINITY), NormVariant::symmetrized(1), NormVariant::symmetrized(2),
      NormVariant::symmetrized(4), NormVariant::log_metric(),   NormVariant::log_metric(1),
      NormVariant::weak_majorization()};
  long failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const Index n = 2 + t % 5;
    const HMat a = gue<double>(n, rng), b = gue<double>(n, rng);
    for (const NormVariant& v : variants) failures += !norm_variant_gap(a, b, v).pass;
    const HMat pa = positive_definite(n, rng), pb = positive_definite(n, rng);
    for (auto [r, s] : {std::pair{2.0, 1.0}, {2.0, 3.0}, {3.0, 0.5}}) {
      failures += !norm_variant_gap(pa, pb, NormVariant::alt(r, s)).pass;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("nonhermitian_bound and hermitian_part_bound") {
  CMat nil = CMat::Zero(2, 2);
  nil(0, 1) = 1;
  const GapReport hp = hermitian_part_bound(nil);
  CHECK(std::abs(hp.lhs) < 1e-12);
  CHECK(hp.rhs == doctest::Approx(0.5));

  RngStream rng(110, 0);
  // a normal matrix: unitary conjugate of a complex diagonal
  const CMat u = haar_unitary(4, HaarMethod::qr, rng).u;
  ComplexVector<double> d(4);
  d << Complex<double>(1, 2), Complex<double>(-0.5, 1), Complex<double>(0.3, -3), Complex<double>(2, 0);
  const CMat normal = u * d.asDiagonal() * u.adjoint();
  const GapReport eq = hermitian_part_bound(normal);
  CHECK(std::abs(eq.margin) < 1e-10);

  long failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const Index n = 1 + t % 5;
    const CMat a = ginibre_complex<double>(n, rng), b = ginibre_complex<double>(n, rng);
    failures += !nonhermitian_bound(a, b, 1).pass;
    failures += !nonhermitian_bound(a, b, int(n)).pass;
    failures += !hermitian_part_bound(a).pass;
  }
  CHECK(failures == 0);
}

TEST_CASE("lieb_triple_bound reduces to the two-matrix case at C = 0") {
  RngStream rng(111, 0);
  const HMat a = gue<double>(4, rng), b = gue<double>(4, rng);
  const LiebTripleReport r = lieb_triple_bound(a, b, HMat::zero(4), true);
  CHECK(r.gap.rhs == doctest::Approx(gt_gap(a, b).rhs).epsilon(1e-10));
  REQUIRE(r.route_deviation);
  CHECK(*r.route_deviation <= 1e-8);

  const HMat c = diag({0.4, -1, 2, 0});
  const HMat bd = diag({1, 2, -0.3, 0.6});
  CHECK(lieb_triple_bound(a, bd, c).gap.pass);
}

TEST_CASE("lieb_triple_bound holds and matches quadrature on random triples") {
  RngStream rng(112, 0);
  long failures = 0;
  double worst_route = 0;
  for (int t = 0; t < 1000; ++t) {
    const Index n = 1 + t % 5;
    const HMat a = gue<double>(n, rng), b = gue<double>(n, rng), c = gue<double>(n, rng);
    const LiebTripleReport r = lieb_triple_bound(a, b, c, t % 10 == 0);
    failures += !r.gap.pass;
    if (r.route_deviation) worst_route = std::max(worst_route, *r.route_deviation);
  }
  CHECK(failures == 0);
  CHECK(worst_route <= 1e-8);
}

TEST_CASE("lieb_kernel limits") {
  CHECK(detail::lieb_kernel(2.0, std::log(2.0), 2.0, std::log(2.0)) == doctest::Approx(0.5));
  const double g = 3.0, h = 3.0 * (1 + 1e-10);
  CHECK(detail::lieb_kernel(g, std::log(g), h, std::log(h)) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(detail::lieb_kernel(1.0, 0.0, std::exp(1.0), 1.0) == doctest::Approx(1.0 / (std::exp(1.0) - 1.0)));
}

TEST_CASE("pauli_reduce examples") {
  const PauliVector<double> a(0.3, -1.2, 0.8);
  const PauliReduction opp = pauli_reduce(a, -a);
  CHECK(opp.cosh_form.lhs == doctest::Approx(1.0));
  CHECK(std::abs(opp.cosh_form.margin) < 1e-10);
  CHECK(opp.consistent);

  const PauliReduction orth = pauli_reduce(PauliVector<double>(0, 0, 1), PauliVector<double>(1, 0, 0));
  CHECK(orth.cosh_form.lhs == doctest::Approx(2.1782).epsilon(1e-4));
  CHECK(orth.cosh_form.rhs == doctest::Approx(2.3811).epsilon(1e-4));

  RngStream rng(113, 0);
  long failures = 0;
  double worst = 0;
  for (int t = 0; t < 100000; ++t) {
    const PauliReduction r = pauli_reduce(sample_pauli_gaussian(rng), sample_pauli_gaussian(rng));
    failures += !r.cosh_form.pass + !r.law_of_cosines.pass;
    worst = std::max({worst, r.lhs_matrix_deviation / std::max(1.0, r.cosh_form.lhs),
                      r.rhs_matrix_deviation / std::max(1.0, r.cosh_form.rhs)});
  }
  CHECK(failures == 0);
  CHECK(worst <= 1e-10);
}

TEST_CASE("equality_order_scan") {
  const ScanConfig grid = ScanConfig::log_grid(1e-3, 1e-1, 15);
  const ScanResult comm = equality_order_scan(diag({1, 2}), diag({-1, 0.5}), grid);
  CHECK(comm.commuting);
  CHECK(comm.max_abs_gap <= 1e-12);
  CHECK_FALSE(comm.order);

  const HMat a = pauli_sigma<double>(3), b = pauli_sigma<double>(1);
  const ScanResult r = equality_order_scan(a, b, grid);
  REQUIRE(r.order);
  CHECK(std::abs(*r.order - 4.0) <= 0.05);
  // Tr(C^dagger C)/24 with C = [sigma3, sigma1] = 2i sigma2: 8/24
  const CMat c = commutator<double>(a.matrix(), b.matrix());
  const double expected = (c.adjoint() * c).trace().real() / 24.0;
  CHECK(*r.quartic_coefficient == doctest::Approx(expected).epsilon(5e-3));

  const ScanResult r2 = equality_order_scan(a * 2.0, b, grid);
  CHECK(*r2.quartic_coefficient / *r.quartic_coefficient == doctest::Approx(4.0).epsilon(5e-3));

  CHECK_THROWS_AS(equality_order_scan(a, b, ScanConfig::log_grid(1e-2, 5e-2, 5)), DomainError);
  ScanConfig bad;
  bad.epsilon_grid = {0.1, 0.05, 0.2};
  CHECK_THROWS_AS(equality_order_scan(a, b, bad), DomainError);
}

TEST_CASE("oscillator_bound") {
  const GapReport one = oscillator_bound(1.0);
  CHECK(one.lhs == doctest::Approx(0.8509).epsilon(1e-4));
  CHECK(one.pass);
  CHECK(oscillator_bound(1e-6).margin < 1e-6);
  CHECK(oscillator_bound(1e-6).pass);
  CHECK(oscillator_bound(10.0).lhs == doctest::Approx(9.08e-5).epsilon(1e-3));
  CHECK_THROWS_AS(oscillator_bound(0.0), DomainError);
}

TEST_CASE("counterexample search finds witnesses for the three-matrix extensions") {
  const Witness triple = counterexample_search(CounterexampleTarget::triple_gt, RngStream(114, 0), 100000);
  REQUIRE(triple.found);
  CHECK_FALSE(triple.gap.pass);
  REQUIRE(triple.matrices.size() == 3);
  // re-evaluate the witness independently
  const HMat a(triple.matrices[0]), b(triple.matrices[1]), c(triple.matrices[2]);
  const double lhs = expm(a + b + c).trace();
  const double rhs = std::abs((expm(a).matrix() * expm(b).matrix() * expm(c).matrix()).trace());
  CHECK(lhs > rhs);

  const Witness abc = counterexample_search(CounterexampleTarget::abc_trace, RngStream(114, 1), 100000, 1);
  REQUIRE(abc.found);
  const CMat& x = abc.matrices[0];
  const CMat& y = abc.matrices[1];
  const CMat& z = abc.matrices[2];
  CHECK(x.imag().norm() == 0.0);
  CHECK((x - x.transpose()).norm() == 0.0);
  const CMat p = x * y * z;
  CHECK(std::abs((p * p).trace()) > (x * x * y * y * z * z).trace().real());

  const Witness control =
      counterexample_search(CounterexampleTarget::triple_gt, RngStream(114, 2), 10000, 1, true);
  CHECK_FALSE(control.found);
  CHECK(control.trial == 10000);
}
