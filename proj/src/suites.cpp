#include "gtlab/report/suites.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>

#include "gtlab/concentration/concentration.hpp"
#include "gtlab/inequalities/counterexample.hpp"
#include "gtlab/inequalities/dyson.hpp"
#include "gtlab/inequalities/equality_scan.hpp"
#include "gtlab/inequalities/majorization.hpp"
#include "gtlab/inequalities/trace_inequalities.hpp"
#include "gtlab/inequalities/two_by_two.hpp"
#include "gtlab/numerics/parallel.hpp"
#include "gtlab/random/ensembles.hpp"
#include "gtlab/studies/studies.hpp"

namespace gtlab {

namespace {

using CMat = ComplexMatrix<double>;
using HMat = HermitianMatrix<double>;
using nlohmann::json;

std::uint64_t tag_hash(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Suite {
 public:
  Suite(const SuiteEntry& entry, std::uint64_t master_seed)
      : entry_(entry), root_(entry.seed.value_or(master_seed), static_cast<std::uint64_t>(entry.name)) {}

  long trials(long fallback) const { return entry_.trials.value_or(fallback); }
  std::vector<long> dims(std::vector<long> fallback) const { return entry_.dims.empty() ? fallback : entry_.dims; }

  template <typename T>
  T option(const std::string& key, T fallback) const {
    return entry_.options.contains(key) ? entry_.options[key].get<T>() : fallback;
  }

  RngStream stream(const std::string& tag, std::uint64_t salt = 0) const {
    return root_.child(tag_hash(tag) ^ detail::mix64(salt));
  }

  /// Applies a configured tolerance override to a relative-tolerance report.
  GapReport retol(const std::string& tag, const GapReport& g) const {
    const auto it = entry_.tolerances.find(tag);
    if (it == entry_.tolerances.end()) return g;
    return GapReport::make(g.lhs, g.rhs, g.context, it->second);
  }

  /// Runs f on `n` trials (trial i on stream(tag, salt).child(i)) and records
  /// the worst report as one case.
  void sweep(const std::string& name, const std::string& tag, long n, std::uint64_t salt,
             const std::function<std::vector<GapReport>(RngStream&)>& f) {
    const RngStream base = stream(tag, salt);
    const auto reports = map_trials(n, [&](std::int64_t i) {
      RngStream s = base.child(static_cast<std::uint64_t>(i));
      return f(s);
    });
    WorstGap worst;
    for (const auto& rs : reports)
      for (const auto& r : rs) worst.push(retol(tag, r));
    ReportCase c = case_from_gap(name, tag, worst.worst(), n);
    c.pass = worst.all_pass();
    c.status = c.pass ? CaseStatus::pass : CaseStatus::fail;
    c.detail = worst.worst().context + "; checks=" + std::to_string(worst.count()) +
               " failures=" + std::to_string(worst.failures());
    cases.push_back(std::move(c));
  }

  void add(ReportCase c) { cases.push_back(std::move(c)); }
  void add_gap(const std::string& name, const std::string& tag, const GapReport& g, long n = 1) {
    cases.push_back(case_from_gap(name, tag, retol(tag, g), n));
  }

  std::vector<ReportCase> cases;

 private:
  const SuiteEntry& entry_;
  RngStream root_;
};

std::string dim_name(const std::string& base, long n) { return base + " N=" + std::to_string(n); }

HMat scaled_gue(Index n, RngStream& s) { return gue<double>(n, s) / std::sqrt(double(n)); }

CMat scaled_ginibre(Index n, RngStream& s) { return ginibre_complex<double>(n, s) / std::sqrt(double(n)); }

/// Deviation d against an allowed bound, as a report lhs = d <= rhs = allowed.
GapReport deviation(double d, double allowed, std::string context) {
  return GapReport::with_tolerance(d, allowed, 0.0, std::move(context));
}

/// Two decades below eps = 0.1 / max(||A||_op, ||B||_op).
ScanConfig scan_grid(const HMat& a, const HMat& b) {
  const double s = std::max({operator_norm(a), operator_norm(b), 1e-300});
  return ScanConfig::log_grid(1e-3 / s, 1e-1 / s, 13);
}

json matrix_json(const CMat& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------- inequalities

void inequalities_suite(Suite& s) {
  const long n_trials = s.trials(1000);
  const long small = std::min<long>(n_trials, 20);
  const double inf = std::numeric_limits<double>::infinity();

  s.sweep("PauliVector identities", "Eq.AB", n_trials, 0, [](RngStream& r) {
    const PauliVector<double> a = sample_pauli_gaussian(r);
    const HMat m = a.matrix();
    const double tr2 = real_trace<double>(CMat(m.matrix() * m.matrix())) / 2.0;
    const double d = std::abs(a.squared_norm() - tr2) + std::abs(m.trace());
    return std::vector<GapReport>{deviation(d, 1e-12 * std::max(1.0, a.squared_norm()), "Eq.AB")};
  });
  s.sweep("pauli_reduce cosh form", "Eq.1a", n_trials, 0, [](RngStream& r) {
    const auto red = pauli_reduce(sample_pauli_gaussian(r), sample_pauli_gaussian(r));
    return std::vector<GapReport>{red.cosh_form};
  });
  s.sweep("pauli_reduce vector and matrix routes", "Eq.1a", n_trials, 1, [](RngStream& r) {
    const auto red = pauli_reduce(sample_pauli_gaussian(r), sample_pauli_gaussian(r));
    const double d = std::max(red.lhs_matrix_deviation, red.rhs_matrix_deviation);
    return std::vector<GapReport>{deviation(d, kPauliRouteTolerance, "Eq.1a routes")};
  });
  s.sweep("pauli_reduce law of cosines", "Eq.1aA", n_trials, 0, [](RngStream& r) {
    const auto red = pauli_reduce(sample_pauli_gaussian(r), sample_pauli_gaussian(r));
    return std::vector<GapReport>{red.law_of_cosines};
  });
  for (double beta : {1e-6, 1e-3, 0.1, 1.0, 10.0}) {
    s.add_gap("oscillator_bound beta=" + std::to_string(beta), "Eq.1b", oscillator_bound(beta));
  }

  for (long nl : s.dims({2, 3, 4})) {
    const Index n = nl;
    s.sweep(dim_name("gt_gap", n), "Eq.1", n_trials, n, [n](RngStream& r) {
      const HMat a = gue<double>(n, r), b = gue<double>(n, r);
      return std::vector<GapReport>{gt_gap(a, b)};
    });
    s.sweep(dim_name("cauchy_trace_check", n), "Lemma1", n_trials, n, [n](RngStream& r) {
      const CMat x = scaled_ginibre(n, r), y = scaled_ginibre(n, r);
      return std::vector<GapReport>{cauchy_trace_check(x, y)};
    });
    s.sweep(dim_name("word_trace_bound", n), "Lemma2", n_trials, n, [n](RngStream& r) {
      const CMat x = scaled_ginibre(n, r);
      std::vector<GapReport> out;
      for (int half = 1; half <= 3; ++half) {
        const unsigned code = static_cast<unsigned>(r.next_u64() & ((1u << (2 * half)) - 1u));
        out.push_back(word_trace_bound(x, WordSpec::from_code(code, half)));
      }
      return out;
    });
    s.sweep(dim_name("lemma3_check", n), "Lemma3", n_trials, n, [n](RngStream& r) {
      const HMat a = scaled_gue(n, r), b = scaled_gue(n, r);
      std::vector<GapReport> out;
      for (int k = 1; k <= 3; ++k) out.push_back(lemma3_check(a, b, k));
      return out;
    });
    s.sweep(dim_name("word_trace_bound with X = AB", n), "Eq.u1", n_trials, n, [n](RngStream& r) {
      const HMat a = scaled_gue(n, r), b = scaled_gue(n, r);
      const CMat x = a.matrix() * b.matrix();
      return std::vector<GapReport>{word_trace_bound(x, WordSpec::parse("XX")), word_trace_bound(x, WordSpec::parse("XXXX"))};
    });
    s.sweep(dim_name("lie_trotter_product order", n), "Eq.LT", small, n, [n](RngStream& r) {
      const HMat a = scaled_gue(n, r), b = scaled_gue(n, r);
      const CMat exact = expm(a + b).matrix();
      const double e1 = (lie_trotter_product(a, b, 32) - exact).norm();
      const double e2 = (lie_trotter_product(a, b, 64) - exact).norm();
      const double order = std::log2(e1 / e2);
      return std::vector<GapReport>{deviation(std::abs(order - 1.0), 0.1, "Eq.LT order=" + std::to_string(order))};
    });
    s.sweep(dim_name("weyl_polya_check", n), "Eq.2.6", n_trials, n, [n](RngStream& r) {
      const CMat x = scaled_ginibre(n, r);
      std::vector<GapReport> out;
      for (Index k = 1; k <= n; ++k) out.push_back(weyl_polya_check(x, 2.0, k));
      return out;
    });
    s.sweep(dim_name("weyl_power_chain", n), "Eq.H", n_trials, n, [n](RngStream& r) {
      const CMat x = scaled_ginibre(n, r);
      std::vector<GapReport> out;
      for (int p = 1; p <= 2; ++p) {
        const auto [g1, g2] = weyl_power_chain(x, p);
        out.push_back(g1);
        out.push_back(g2);
      }
      return out;
    });
    s.sweep(dim_name("trace_power_check", n), "Eq.W2", n_trials, n, [n](RngStream& r) {
      const CMat x = scaled_ginibre(n, r);
      std::vector<GapReport> out;
      for (int p = 1; p <= 3; ++p) out.push_back(trace_power_check(x, p));
      return out;
    });
    s.sweep(dim_name("karamata_check on Weyl log pairs", n), "Lemma5", n_trials, n, [n](RngStream& r) {
      const auto pair = weyl_log_pair(scaled_ginibre(n, r));
      return std::vector<GapReport>{karamata_check(pair, [](double t) { return std::exp(t); }),
                                    karamata_check(pair, [](double t) { return std::exp(2.0 * t); })};
    });
    s.sweep(dim_name("Weyl log pair prefix sums", n), "Eq.i1", n_trials, n, [n](RngStream& r) {
      const auto pair = weyl_log_pair(scaled_ginibre(n, r));
      std::vector<GapReport> out;
      double sa = 0, sb = 0;
      for (Index q = 0; q < pair.a().size(); ++q) {
        sa += pair.a()(q);
        sb += pair.b()(q);
        out.push_back(GapReport::with_tolerance(sb, sa, 1e-8 * std::max({1.0, std::abs(sa), std::abs(sb)}),
                                                "Eq.i1 q=" + std::to_string(q + 1)));
      }
      return out;
    });
    s.sweep(dim_name("phi_power_check", n), "Eq.4", n_trials, n, [n](RngStream& r) {
      const CMat x = scaled_ginibre(n, r);
      std::vector<GapReport> out;
      for (double p : {1.0, 3.0})
        for (int sp = 1; sp <= 2; ++sp) out.push_back(phi_power_check(x, SpectralFunctional::schatten_power(p), sp));
      return out;
    });
    s.sweep(dim_name("phi_power_check top-k", n), "Eq.4.2", n_trials, n, [n](RngStream& r) {
      const CMat x = scaled_ginibre(n, r);
      std::vector<GapReport> out;
      for (int k = 1; k <= n; ++k)
        for (int sp = 1; sp <= 2; ++sp) out.push_back(phi_power_check(x, SpectralFunctional::top_k(k), sp));
      return out;
    });
    s.sweep(dim_name("phi_exp_check", n), "Eq.4.1", n_trials, n, [n](RngStream& r) {
      const HMat a = gue<double>(n, r), b = gue<double>(n, r);
      std::vector<GapReport> out;
      for (int k = 1; k <= n; ++k) out.push_back(phi_exp_check(a, b, SpectralFunctional::top_k(k)));
      out.push_back(phi_exp_check(a, b, SpectralFunctional::schatten_power(2)));
      return out;
    });
    s.sweep(dim_name("weak majorization", n), "WeakMaj", n_trials, n, [n](RngStream& r) {
      const HMat a = gue<double>(n, r), b = gue<double>(n, r);
      return std::vector<GapReport>{norm_variant_gap(a, b, NormVariant::weak_majorization())};
    });
    s.sweep(dim_name("Schatten norms", n), "Eq.5", n_trials, n, [n, inf](RngStream& r) {
      const HMat a = gue<double>(n, r), b = gue<double>(n, r);
      std::vector<GapReport> out;
      for (double p : {1.0, 2.0, 4.0, inf}) out.push_back(norm_variant_gap(a, b, NormVariant::schatten(p)));
      return out;
    });
    s.sweep(dim_name("symmetrized products", n), "Eq.5a", n_trials, n, [n](RngStream& r) {
      const HMat a = gue<double>(n, r), b = gue<double>(n, r);
      std::vector<GapReport> out;
      for (double p : {1.0, 2.0, 4.0}) out.push_back(norm_variant_gap(a, b, NormVariant::symmetrized(p)));
      return out;
    });
    s.sweep(dim_name("log metric", n), "Eq.Sn", n_trials, n, [n, inf](RngStream& r) {
      const HMat a = gue<double>(n, r), b = gue<double>(n, r);
      std::vector<GapReport> out;
      for (double p : {1.0, 4.0, inf}) out.push_back(norm_variant_gap(a, b, NormVariant::log_metric(p)));
      return out;
    });
    s.sweep(dim_name("delta_2 distance", n), "Eq.Sn1", n_trials, n, [n](RngStream& r) {
      const HMat a = gue<double>(n, r), b = gue<double>(n, r);
      return std::vector<GapReport>{norm_variant_gap(a, b, NormVariant::log_metric(2))};
    });
    s.sweep(dim_name("Araki-Lieb-Thirring", n), "ALT", n_trials, n, [n](RngStream& r) {
      const HMat a = expm(scaled_gue(n, r)), b = expm(scaled_gue(n, r));
      std::vector<GapReport> out;
      for (auto [rr, ss] : {std::pair{2.0, 1.0}, {2.0, 3.0}, {3.0, 0.5}}) {
        out.push_back(norm_variant_gap(a, b, NormVariant::alt(rr, ss)));
      }
      return out;
    });
    s.sweep(dim_name("nonhermitian_bound", n), "Eq.4.1a", n_trials, n, [n](RngStream& r) {
      const CMat a = scaled_ginibre(n, r), b = scaled_ginibre(n, r);
      return std::vector<GapReport>{nonhermitian_bound(a, b, 1), nonhermitian_bound(a, b, static_cast<int>(n))};
    });
    s.sweep(dim_name("hermitian_part_bound", n), "Eq.4.1b", n_trials, n, [n](RngStream& r) {
      return std::vector<GapReport>{hermitian_part_bound(scaled_ginibre(n, r))};
    });
    s.sweep(dim_name("lieb_triple_bound", n), "Eq.4.1c", n_trials, n, [n](RngStream& r) {
      const HMat a = scaled_gue(n, r), b = scaled_gue(n, r), c = scaled_gue(n, r);
      return std::vector<GapReport>{lieb_triple_bound(a, b, c).gap};
    });
    s.sweep(dim_name("lieb_triple_bound quadrature route", n), "Eq.4.1c", small, n + 1000, [n](RngStream& r) {
      const HMat a = scaled_gue(n, r), b = scaled_gue(n, r), c = scaled_gue(n, r);
      const auto rep = lieb_triple_bound(a, b, c, true);
      return std::vector<GapReport>{deviation(rep.route_deviation.value_or(1.0), 1e-8, "Eq.4.1c route")};
    });
    s.sweep(dim_name("equality scan, non-commuting", n), "EqualityCondition", small, n, [n](RngStream& r) {
      const HMat a = gue<double>(n, r), b = gue<double>(n, r);
      const ScanResult sr = equality_order_scan(a, b, scan_grid(a, b));
      const double order = sr.order.value_or(0.0);
      return std::vector<GapReport>{deviation(std::abs(order - 4.0), 0.1, "order=" + std::to_string(order))};
    });
    s.sweep(dim_name("equality scan, commuting", n), "EqualityCondition", small, n + 1000, [n](RngStream& r) {
      RealVector<double> da(n), db(n);
      for (Index i = 0; i < n; ++i) {
        da(i) = r.std_normal();
        db(i) = r.std_normal();
      }
      const ScanResult sr =
          equality_order_scan(HMat::diagonal(da), HMat::diagonal(db), ScanConfig::log_grid(1e-3, 1.0, 9));
      return std::vector<GapReport>{deviation(sr.max_abs_gap, 1e-12, "commuting max |g|")};
    });
    s.sweep(dim_name("quartic coefficient", n), "EpsExpansion", small, n, [n](RngStream& r) {
      const HMat a = gue<double>(n, r), b = gue<double>(n, r);
      const ScanResult sr = equality_order_scan(a, b, scan_grid(a, b));
      const CMat c = commutator<double>(a.matrix(), b.matrix());
      const double predicted = real_trace<double>(CMat(c.adjoint() * c)) / 24.0;
      const double coef = sr.quartic_coefficient.value_or(0.0);
      return std::vector<GapReport>{deviation(std::abs(coef - predicted) / predicted, 5e-3,
                                              "coefficient=" + std::to_string(coef))};
    });
  }
}

// ------------------------------------------------------------- counterexamples

ReportCase witness_case(const std::string& name, const std::string& tag, const Witness& w, long budget) {
  ReportCase c;
  c.name = name;
  c.equation = tag;
  c.trials = w.found ? w.trial + 1 : budget;
  if (w.found) {
    c.lhs = w.gap.lhs;
    c.rhs = w.gap.rhs;
    c.margin = w.gap.margin;
    json mats = json::array();
    for (const auto& m : w.matrices) mats.push_back(matrix_json(m));
    c.witness = json{{"trial", w.trial}, {"k", w.k}, {"lhs", w.gap.lhs}, {"rhs", w.gap.rhs}, {"matrices", mats}};
  }
  c.pass = w.found;
  c.status = c.pass ? CaseStatus::pass : CaseStatus::fail;
  c.detail = w.found ? "witness found (lhs > rhs)" : "no witness within budget";
  return c;
}

void counterexamples_suite(Suite& s) {
  const long budget = s.trials(100000);
  const Witness triple = counterexample_search(CounterexampleTarget::triple_gt, s.stream("Eq.4.1d"), budget);
  s.add(witness_case("triple Golden-Thompson witness", "Eq.4.1d", triple, budget));
  const Witness abc = counterexample_search(CounterexampleTarget::abc_trace, s.stream("ABC"), budget, 1);
  s.add(witness_case("ABC trace witness k=1", "ABC", abc, budget));

  const long control = std::min<long>(budget, 10000);
  const Witness none = counterexample_search(CounterexampleTarget::triple_gt, s.stream("Eq.4.1d", 1), control, 1, true);
  ReportCase c = witness_case("triple with C = 0 (reduces to Eq.1)", "Eq.4.1d", none, control);
  c.pass = !none.found;
  c.status = c.pass ? CaseStatus::pass : CaseStatus::fail;
  c.detail = none.found ? "unexpected witness" : "no witness, as for two matrices";
  s.add(std::move(c));
}

// --------------------------------------------------------------- concentration

ReportCase tail_case(const std::string& name, const std::string& tag, const TailReport& t) {
  ReportCase c;
  c.name = name;
  c.equation = tag;
  c.lhs = t.empirical;
  c.rhs = t.bound;
  c.margin = t.bound - t.ci.high;
  c.trials = t.trials;
  c.ci = t.ci;
  c.pass = t.pass;
  c.status = t.pass ? CaseStatus::pass : (t.indeterminate ? CaseStatus::indeterminate : CaseStatus::fail);
  c.detail = t.context + (t.escalated ? " (escalated)" : "");
  return c;
}

MatrixSeries random_series(int terms, Index d, double mu, RngStream& r) {
  MatrixSeries m;
  m.mu = mu;
  for (int p = 0; p < terms; ++p) m.terms.push_back(scaled_gue(d, r));
  return m;
}

void concentration_suite(Suite& s) {
  const long n_trials = s.trials(10000);
  const long guard_trials = std::max<long>(n_trials, 1000);

  for (long nl : s.dims({8, 16, 32})) {
    for (Index k : {1, 2, 4}) {
      if (k > nl) continue;
      for (double eps : {0.5, 1.0, 2.0}) {
        CovarianceExperiment exp;
        exp.n = nl;
        exp.k = k;
        exp.epsilon = eps;
        exp.trials = guard_trials;
        const std::string cell = " N=" + std::to_string(nl) + " k=" + std::to_string(k) + " eps=" + std::to_string(eps);
        s.add(tail_case("aw_domination" + cell, "Eq.RU",
                        aw_domination(exp, s.stream("Eq.RU", tag_hash(cell)))));
        if (eps != 1.0) continue;
        const CovarianceTail t = empirical_tail(exp, s.stream("Eq.rf", tag_hash(cell)));
        const double f2 = t.two_sided_frequency();
        s.add_gap("union bound" + cell, "Eq.rf",
                  GapReport::with_tolerance(f2, t.upper_frequency() + t.lower_frequency(), 0.0, "Eq.rf"), t.trials);
        s.add_gap("upper Chebyshev bound" + cell, "Eq.rf1",
                  GapReport::make(t.upper_frequency(), t.upper_chebyshev_bound, "Eq.rf1 c=" + std::to_string(t.upper_c)),
                  t.trials);
        s.add_gap("lower Chebyshev bound" + cell, "Eq.rf2",
                  GapReport::make(t.lower_frequency(), t.lower_chebyshev_bound, "Eq.rf2 c=" + std::to_string(t.lower_c)),
                  t.trials);
        s.add_gap("per-trial trace bound" + cell, "Eq.J",
                  GapReport::with_tolerance(double(t.bernstein_violations), 0.0, 0.0, "Eq.J violations"), t.trials);
      }
    }
  }

  {
    // E Sigma = I_k, N = 32, k = 2.
    const Index n = 32, k = 2;
    const RngStream base = s.stream("Eq.S");
    const auto sigmas = map_trials(n_trials, [&](std::int64_t i) {
      RngStream r = base.child(static_cast<std::uint64_t>(i));
      return covariance(ginibre_complex<double>(n, k, r)).matrix();
    });
    double worst = 0;
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b)
        for (int part = 0; part < 2; ++part) {
          RunningStats st;
          for (const auto& m : sigmas) st.push(part == 0 ? m(a, b).real() : m(a, b).imag());
          const double target = (a == b && part == 0) ? 1.0 : 0.0;
          if (st.standard_error() > 0) worst = std::max(worst, std::abs(st.mean() - target) / st.standard_error());
        }
    s.add_gap("mean covariance N=32 k=2 (standard errors)", "Eq.S", deviation(worst, 4.0, "Eq.S"), n_trials);
  }
  s.sweep("rank-one decomposition", "Eq.S3", std::min<long>(n_trials, 1000), 0, [](RngStream& r) {
    const CMat x = ginibre_complex<double>(16, 3, r);
    const double d = (covariance(x).matrix() - covariance_rank_one(x).matrix()).cwiseAbs().maxCoeff();
    return std::vector<GapReport>{deviation(d, 1e-12, "Eq.S3")};
  });
  s.sweep("operator norm via extreme eigenvalues", "Eq.SP", std::min<long>(n_trials, 1000), 0, [](RngStream& r) {
    const HMat m = covariance(ginibre_complex<double>(8, 3, r)).shifted(-1.0);
    const double via_eig = operator_norm(m);
    const double via_sv = singular_values<double>(m.matrix())(0);
    return std::vector<GapReport>{deviation(std::abs(via_eig - via_sv), 1e-12 * std::max(1.0, via_sv), "Eq.SP")};
  });
  s.sweep("trace-norm step", "Eq.4.29", n_trials, 0, [](RngStream& r) {
    const HMat p = expm(scaled_gue(4, r)), q = gue<double>(4, r);
    return std::vector<GapReport>{trace_norm_step(p, q)};
  });

  const long gte_trials = s.option<long>("gte_trials", 100000);
  for (auto [n, k, mu] : {std::tuple{Index(4), Index(2), 1.0}, {Index(4), Index(2), -1.0}, {Index(6), Index(3), 0.5}}) {
    CovarianceExperiment exp;
    exp.n = n;
    exp.k = k;
    exp.trials = gte_trials;
    const MonteCarloGap g = aw_mgf_lemma_check(exp, mu, s.stream("Eq.GTE", tag_hash(std::to_string(n * 10 + k) + std::to_string(mu))));
    ReportCase c = case_from_gap("aw_mgf_lemma_check N=" + std::to_string(n) + " k=" + std::to_string(k) +
                                     " mu=" + std::to_string(mu),
                                 "Eq.GTE", g.gap, exp.trials);
    if (c.pass && !g.separated) {
      c.pass = false;
      c.status = CaseStatus::indeterminate;
    }
    c.detail += g.separated ? "; separated" : "; not separated at this trial count";
    s.add(std::move(c));
  }
  {
    CovarianceExperiment exp;
    exp.n = 6;
    exp.k = 1;
    exp.trials = gte_trials;
    const MonteCarloGap g = aw_mgf_lemma_check(exp, 1.0, s.stream("Eq.GTE", 1));
    const double allowed = 4.0 * std::hypot(g.lhs_se, g.rhs_se);
    s.add(case_from_estimate("aw_mgf_lemma_check k=1 equality", "Eq.GTE", g.gap.lhs, g.gap.rhs, allowed, exp.trials,
                             std::nullopt, "scalar case: both sides estimate the same MGF"));
  }
  {
    const VarianceEstimate v = monte_carlo_variance_proxy(16, 2, guard_trials, s.stream("Eq.RU", 7));
    s.add(case_from_estimate("variance proxy, Monte Carlo vs k/N (N=16, k=2)", "Eq.RU", v.sigma2,
                             gaussian_row_variance_proxy(16, 2), 4.0 * v.standard_error, guard_trials, std::nullopt,
                             "sigma^2 = sum ||E S^2||"));
  }

  const int terms = s.option<int>("oliveira_terms", 10);
  const int series_count = s.option<int>("oliveira_series", 10);
  for (Index d : {2, 3, 4}) {
    for (double mu : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
      const std::string cell = " d=" + std::to_string(d) + " mu=" + std::to_string(mu);
      const RngStream base = s.stream("Eq.OB", tag_hash(cell));
      WorstGap ob, dd, dd3, ddn, dd1, ob_aw;
      for (int i = 0; i < series_count; ++i) {
        RngStream r = base.child(static_cast<std::uint64_t>(i));
        const MatrixSeries series = random_series(terms, d, mu, r);
        const MonteCarloGap g = oliveira_mgf_check(series, ExpectationMode::enumerate, r);
        ob.push(g.gap);
        ob_aw.push(oliveira_vs_aw(series));
        const std::vector<double> seq = oliveira_recursion(series);
        const double scale = std::max(1.0, seq.front());
        dd.push(deviation(std::abs(seq.front() - g.gap.rhs) / scale + std::abs(seq.back() - g.gap.lhs) / scale, 1e-9,
                          "Eq.DD endpoints"));
        for (std::size_t j = 1; j < seq.size(); ++j) {
          const GapReport f = mgf_factor_check(series.terms[j - 1], mu, SignKind::rademacher);
          dd1.push(f);
          ddn.push(GapReport::make(seq[j], seq[j - 1], "Eq.DDN j=" + std::to_string(j)));
          dd3.push(GapReport::make(seq[j], f.lhs * seq[j - 1], "Eq.DD3 j=" + std::to_string(j)));
        }
      }
      auto add_worst = [&](const std::string& name, const std::string& tag, const WorstGap& w) {
        ReportCase c = case_from_gap(name + cell, tag, s.retol(tag, w.worst()), w.count());
        c.pass = w.all_pass();
        c.status = c.pass ? CaseStatus::pass : CaseStatus::fail;
        s.add(std::move(c));
      };
      add_worst("oliveira_mgf_check enumerate N=" + std::to_string(terms), "Eq.OB", ob);
      add_worst("oliveira_vs_aw", "Eq.OB-AW", ob_aw);
      add_worst("recursion endpoints", "Eq.DD", dd);
      add_worst("recursion step", "Eq.DD3", dd3);
      add_worst("recursion monotone", "Eq.DDN", ddn);
      add_worst("mgf_factor_check rademacher", "Eq.DD1", dd1);
    }
  }
  s.sweep("mgf_factor_check gaussian", "Eq.DD1", std::min<long>(n_trials, 1000), 1, [](RngStream& r) {
    const HMat a = scaled_gue(3, r);
    return std::vector<GapReport>{mgf_factor_check(a, 1.5, SignKind::gaussian), mgf_factor_check(a, 0.5, SignKind::gaussian)};
  });
  {
    RngStream r = s.stream("Eq.OB", 99);
    MatrixSeries series = random_series(20, 3, 0.5, r);
    series.sign_kind = SignKind::gaussian;
    const MonteCarloGap g = oliveira_mgf_check(series, ExpectationMode::montecarlo, r.child(1), guard_trials < 10000 ? 10000 : guard_trials);
    ReportCase c = case_from_gap("oliveira_mgf_check montecarlo gaussian N=20 d=3", "Eq.OB", g.gap, std::max<long>(guard_trials, 10000));
    s.add(std::move(c));
  }

  const long chernoff_trials = s.option<long>("chernoff_trials", 100000);
  for (double eps : {1.0, 2.0, 3.0}) {
    ScalarChernoffParams p;
    p.n = 20;
    p.sigma2 = 1;
    p.epsilon = eps;
    p.trials = chernoff_trials;
    s.add(tail_case("scalar_chernoff N=20 sigma2=1 eps=" + std::to_string(eps), "Eq.C",
                    scalar_chernoff(p, s.stream("Eq.C", tag_hash(std::to_string(eps))))));
  }
}

// --------------------------------------------------------------------- studies

void studies_suite(Suite& s) {
  const long n_trials = std::max<long>(s.trials(1000000), 10000);
  const double four_thirds = 4.0 / 3.0;

  const PauliQuadrature q = pauli_ratio_quadrature(1e-10);
  s.add(case_from_estimate("pauli_ratio_quadrature", "Eq.R", q.ratio, four_thirds, 1e-8, 1, std::nullopt,
                           "radial chi_3 integrals"));

  const PauliRatioEstimate mc = pauli_ratio_mc(n_trials, s.stream("Eq.R"));
  s.add(case_from_estimate("pauli_ratio_mc", "Eq.R", mc.estimate.ratio, four_thirds, 3.0 * mc.estimate.ratio_se,
                           n_trials, mc.estimate.ci, "allowed = 3 propagated standard errors"));
  s.add(case_from_estimate("pauli_ratio_mc cross term", "Eq.R", mc.cross_term_mean, 0.0, 4.0 * mc.cross_term_se, n_trials,
                           std::nullopt, "cos(theta) term averages to zero"));
  s.add_gap("pauli_ratio_mc trial-wise Golden-Thompson", "Eq.R",
            GapReport::with_tolerance(double(mc.golden_thompson_violations), 0.0, 0.0, "violations"), n_trials);
  {
    const long route_trials = 10000;
    const PauliRatioEstimate vec = pauli_ratio_mc(route_trials, s.stream("Eq.R", 1));
    const RatioEstimate mat = pauli_ratio_matrix_route(route_trials, s.stream("Eq.R", 1));
    const double vec_num = vec.estimate.numerator_mean + vec.cross_term_mean;
    const double d = std::abs(mat.numerator_mean - vec_num) / vec_num +
                     std::abs(mat.denominator_mean - vec.estimate.denominator_mean) / vec.estimate.denominator_mean;
    s.add_gap("pauli ratio matrix route vs vector route", "Eq.R", deviation(d, 1e-10, "relative difference"),
              route_trials);
  }

  const long herm_trials = s.option<long>("hermitization_trials", 200);
  const double sqrt2 = std::sqrt(2.0);
  std::vector<std::pair<long, double>> ratios;
  for (long n : s.dims({16, 64})) {
    const RatioEstimate h = hermitization_ratio(n, herm_trials, s.stream("Sqrt2", static_cast<std::uint64_t>(n)));
    ratios.emplace_back(n, h.ratio);
    s.add(case_from_estimate("hermitization_ratio N=" + std::to_string(n), "Sqrt2", h.ratio, sqrt2, 0.08 * sqrt2,
                             herm_trials, h.ci,
                             "finite-N estimate; retries=" + std::to_string(h.retries)));
  }
  if (ratios.size() >= 2) {
    const auto& lo = ratios.front();
    const auto& hi = ratios.back();
    s.add_gap("hermitization trend N=" + std::to_string(lo.first) + " -> " + std::to_string(hi.first), "Sqrt2",
              GapReport::with_tolerance(std::abs(hi.second - sqrt2), std::abs(lo.second - sqrt2), 0.0,
                                        "distance to sqrt(2) shrinks"),
              herm_trials);
  }
  {
    const long n = s.dims({16, 64}).front();
    HermitizationOptions scaled;
    scaled.scale = 3.0;
    const RatioEstimate a = hermitization_ratio(n, 50, s.stream("Sqrt2", 1));
    const RatioEstimate b = hermitization_ratio(n, 50, s.stream("Sqrt2", 1), scaled);
    s.add_gap("hermitization scale invariance N=" + std::to_string(n), "Sqrt2",
              deviation(std::abs(a.ratio - b.ratio) / a.ratio, 1e-9, "same draws, entries scaled by 3"), 50);
  }
}

}  // namespace

std::vector<ReportCase> run_suite(const SuiteEntry& entry, std::uint64_t master_seed) {
  Suite s(entry, master_seed);
  switch (entry.name) {
    case SuiteName::inequalities: inequalities_suite(s); break;
    case SuiteName::concentration: concentration_suite(s); break;
    case SuiteName::studies: studies_suite(s); break;
    case SuiteName::counterexamples: counterexamples_suite(s); break;
  }
  return std::move(s.cases);
}

ReportDocument run(const SuiteConfig& config) {
  ReportDocument doc;
  doc.seed = resolve_master_seed(config);
  if (config.timestamp) {
    doc.timestamp = *config.timestamp;
  } else if (const char* t = std::getenv("GTLAB_TIMESTAMP"); t != nullptr && *t != '\0') {
    doc.timestamp = t;
  } else {
    doc.timestamp = kDefaultTimestamp;
  }
  for (const auto& entry : config.suites) {
    auto cases = run_suite(entry, doc.seed);
    doc.cases.insert(doc.cases.end(), std::make_move_iterator(cases.begin()), std::make_move_iterator(cases.end()));
  }
  doc.tally();
  return doc;
}

int exit_status(const ReportDocument& doc) { return doc.summary.failed == 0 ? 0 : 1; }

}  // namespace gtlab
