#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "gtlab/random/block_moments.hpp"
#include "gtlab/random/ensembles.hpp"
#include "gtlab/numerics/statistics.hpp"

using namespace gtlab;
using CMat = ComplexMatrix<double>;

TEST_CASE("streams are deterministic and distinct") {
  RngStream a(1, 2), b(1, 2), c(1, 3), d(2, 2);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    CHECK(x != d.next_u64());
  }
  CHECK(a == b);
  CHECK(a.draws() == 100);

  const RngStream root(5, 0);
  std::set<std::uint64_t> firsts;
  for (std::uint64_t i = 0; i < 1000; ++i) firsts.insert(root.child(i).next_u64());
  CHECK(firsts.size() == 1000);
  RngStream c1 = root.child(7), c2 = root.child(7);
  CHECK(c1.next_u64() == c2.next_u64());
}

TEST_CASE("uniform, sign and normal moments") {
  RngStream rng(3, 0);
  RunningStats u, s, z, z2, z4;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.uniform();
    CHECK_UNARY(x >= 0.0);
    CHECK_UNARY(x < 1.0);
    u.push(x);
    s.push(rng.rademacher());
    const double g = rng.std_normal();
    z.push(g);
    z2.push(g * g);
    z4.push(g * g * g * g);
  }
  CHECK(std::abs(u.mean() - 0.5) < 5 * u.standard_error());
  CHECK(std::abs(s.mean()) < 5 * s.standard_error());
  CHECK(std::abs(z.mean()) < 5 * z.standard_error());
  CHECK(std::abs(z2.mean() - 1) < 5 * z2.standard_error());
  CHECK(std::abs(z4.mean() - 3) < 5 * z4.standard_error());
}

TEST_CASE("Ginibre and GUE second moments") {
  RngStream rng(4, 0);
  RunningStats entry, tr_gue, tr_goe, real_entry;
  const Index n = 4;
  for (int t = 0; t < 20000; ++t) {
    const CMat x = ginibre_complex<double>(n, rng);
    entry.push(std::norm(x(1, 2)));
    real_entry.push(std::norm(ginibre_real<double>(n, rng)(0, 3)));
    const CMat g = gue<double>(n, rng).matrix();
    tr_gue.push((g * g).trace().real());
    const CMat o = goe<double>(n, rng).matrix();
    tr_goe.push((o * o).trace().real());
  }
  CHECK(std::abs(entry.mean() - 1.0) < 5 * entry.standard_error());
  CHECK(std::abs(real_entry.mean() - 1.0) < 5 * real_entry.standard_error());
  CHECK(std::abs(tr_gue.mean() - n * n / 2.0) < 5 * tr_gue.standard_error());
  CHECK(std::abs(tr_goe.mean() - n * (n + 1) / 2.0) < 5 * tr_goe.standard_error());
}

TEST_CASE("GUE draws are Hermitian; GOE draws are real symmetric") {
  RngStream rng(5, 0);
  const CMat g = gue<double>(6, rng).matrix();
  CHECK((g - g.adjoint()).norm() == 0.0);
  const CMat o = goe<double>(6, rng).matrix();
  CHECK(o.imag().norm() == 0.0);
  CHECK((o - o.transpose()).norm() == 0.0);
}

TEST_CASE("Haar draws are unitary for both methods") {
  RngStream rng(6, 0);
  for (HaarMethod m : {HaarMethod::qr, HaarMethod::polar}) {
    for (Index n : {1, 2, 5, 16}) {
      const CMat u = haar_unitary(n, m, rng).u;
      CHECK((u.adjoint() * u - CMat::Identity(n, n)).norm() < 1e-12);
    }
  }
  CHECK_THROWS_AS(haar_unitary(0, HaarMethod::qr, rng), DomainError);
}

TEST_CASE("Haar N = 1 is a uniform phase") {
  RngStream rng(7, 0);
  RunningStats re, im, arg;
  for (int t = 0; t < 20000; ++t) {
    const std::complex<double> z = haar_unitary(1, HaarMethod::qr, rng).u(0, 0);
    CHECK(std::abs(std::abs(z) - 1.0) < 1e-14);
    re.push(z.real());
    im.push(z.imag());
    arg.push(std::arg(z));
  }
  CHECK(std::abs(re.mean()) < 5 * re.standard_error());
  CHECK(std::abs(im.mean()) < 5 * im.standard_error());
  // uniform on (-pi, pi]: variance pi^2/3
  CHECK(std::abs(arg.variance() - M_PI * M_PI / 3) < 0.05);
}

TEST_CASE("Haar |U_11|^2 has mean 1/N for both methods") {
  const Index n = 8;
  for (HaarMethod m : {HaarMethod::qr, HaarMethod::polar}) {
    RngStream rng(8, static_cast<std::uint64_t>(m));
    RunningStats s, off;
    for (int t = 0; t < 10000; ++t) {
      const CMat u = haar_unitary(n, m, rng).u;
      s.push(std::norm(u(0, 0)));
      off.push(std::norm(u(3, 6)));
    }
    CHECK(std::abs(s.mean() - 1.0 / n) < 5 * s.standard_error());
    CHECK(std::abs(off.mean() - 1.0 / n) < 5 * off.standard_error());
  }
}

TEST_CASE("QR and polar Haar draws agree in distribution of |Tr U|^2") {
  // E|Tr U|^2 = 1 for Haar U(N), N >= 1.
  const Index n = 6;
  RunningStats qr, polar;
  RngStream a(9, 0), b(9, 1);
  for (int t = 0; t < 20000; ++t) {
    qr.push(std::norm(haar_unitary(n, HaarMethod::qr, a).u.trace()));
    polar.push(std::norm(haar_unitary(n, HaarMethod::polar, b).u.trace()));
  }
  CHECK(two_sample_z(qr, polar) < 4.0);
  CHECK(std::abs(qr.mean() - 1.0) < 5 * qr.standard_error());
  CHECK(std::abs(polar.mean() - 1.0) < 5 * polar.standard_error());
}

TEST_CASE("Pauli Gaussian vectors have E|a|^2 = 3") {
  RngStream rng(10, 0);
  RunningStats s;
  for (int t = 0; t < 50000; ++t) s.push(sample_pauli_gaussian(rng).squared_norm());
  CHECK(std::abs(s.mean() - 3.0) < 5 * s.standard_error());
}

TEST_CASE("sample_matrix dispatch and validation") {
  RngStream rng(11, 0);
  EnsembleSpec spec;
  spec.kind = EnsembleSpec::Kind::haar_unitary;
  spec.dim = 5;
  spec.block = 2;
  const auto m = sample_matrix(spec, rng);
  REQUIRE(std::holds_alternative<CMat>(m));
  CHECK(std::get<CMat>(m).rows() == 2);
  spec.kind = EnsembleSpec::Kind::gue;
  CHECK_THROWS_AS(sample_matrix(spec, rng), DomainError);
  spec.kind = EnsembleSpec::Kind::ginibre_complex;
  spec.block = 6;
  CHECK_THROWS_AS(sample_matrix(spec, rng), DomainError);
  spec.block.reset();
  spec.dim = 0;
  CHECK_THROWS_AS(sample_matrix(spec, rng), DomainError);
}

TEST_CASE("scaled Haar blocks are approximately standard complex Gaussian") {
  const BlockMomentReport r = block_gaussian_moments(64, 2, 20000, RngStream(12, 0));
  REQUIRE(r.entries.size() == 4);
  for (const EntryMoments& e : r.entries) {
    CHECK(std::abs(e.mean_re) < 5 * e.mean_re_se);
    CHECK(std::abs(e.mean_im) < 5 * e.mean_im_se);
    CHECK(e.second >= 0.9);
    CHECK(e.second <= 1.1);
    // E|g|^4 = 2N/(N+1) for a scaled Haar entry
    CHECK(std::abs(e.fourth - 2.0 * 64 / 65) < 5 * e.fourth_se);
  }
  CHECK_THROWS_AS(block_gaussian_moments(4, 5, 1000, RngStream(1, 0)), DomainError);
  CHECK_THROWS_AS(block_gaussian_moments(4, 2, 10, RngStream(1, 0)), DomainError);
}

TEST_CASE("block moments are reproducible") {
  const BlockMomentReport a = block_gaussian_moments(8, 2, 1000, RngStream(13, 0));
  const BlockMomentReport b = block_gaussian_moments(8, 2, 1000, RngStream(13, 0));
  for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].fourth == b.entries[i].fourth);
}

TEST_CASE("fixed stream gives bit-identical draws") {
  RngStream a(42, 7), b(42, 7);
  CHECK((ginibre_complex<double>(5, a) - ginibre_complex<double>(5, b)).norm() == 0.0);
  CHECK((gue<double>(5, a).matrix() - gue<double>(5, b).matrix()).norm() == 0.0);
  CHECK((haar_unitary(5, HaarMethod::polar, a).u - haar_unitary(5, HaarMethod::polar, b).u).norm() == 0.0);
  CHECK(sample_pauli_gaussian(a).coords() == sample_pauli_gaussian(b).coords());
}

TEST_CASE("Haar draws have unit-modulus determinant") {
  RngStream rng(14, 0);
  for (HaarMethod m : {HaarMethod::qr, HaarMethod::polar})
    for (int t = 0; t < 50; ++t) CHECK(std::abs(std::abs(haar_unitary(7, m, rng).u.determinant()) - 1.0) < 1e-9);
}

TEST_CASE("Ginibre entries are centred") {
  RngStream rng(15, 0);
  RunningStats re, im;
  for (int t = 0; t < 10000; ++t) {
    const CMat x = ginibre_complex<double>(3, rng);
    re.push(x(2, 1).real());
    im.push(x(2, 1).imag());
  }
  CHECK(std::abs(re.mean()) < 4 * re.standard_error());
  CHECK(std::abs(im.mean()) < 4 * im.standard_error());
  CHECK(std::abs(re.variance() - 0.5) < 0.03);
}

TEST_CASE("Pauli coordinates are uncorrelated") {
  RngStream rng(16, 0);
  RunningStats c12, c13, c23;
  for (int t = 0; t < 100000; ++t) {
    const auto v = sample_pauli_gaussian(rng).coords();
    c12.push(v(0) * v(1));
    c13.push(v(0) * v(2));
    c23.push(v(1) * v(2));
  }
  for (const RunningStats* s : {&c12, &c13, &c23}) CHECK(std::abs(s->mean()) < 4 * s->standard_error());
}

TEST_CASE("full Haar block has unit mean square entry by row unitarity") {
  const BlockMomentReport r = block_gaussian_moments(3, 3, 2000, RngStream(17, 0));
  double total = 0;
  for (const EntryMoments& e : r.entries) total += e.second;
  CHECK(total / 9.0 == doctest::Approx(1.0).epsilon(1e-12));
}
