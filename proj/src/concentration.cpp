#include "gtlab/concentration/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gtlab/numerics/optimize.hpp"
#include "gtlab/numerics/parallel.hpp"
#include "gtlab/random/ensembles.hpp"

namespace gtlab {

namespace {

using CMat = ComplexMatrix<double>;
using HMat = HermitianMatrix<double>;

constexpr std::uint64_t kEscalationStream = 0xE5CA1A7EULL;

/// log(mean_i exp(v_i)).
double log_mean_exp(const std::vector<double>& v) {
  if (v.empty()) return -std::numeric_limits<double>::infinity();
  const double top = *std::max_element(v.begin(), v.end());
  double s = 0;
  for (double x : v) s += std::exp(x - top);
  return top + std::log(s / double(v.size()));
}

TailReport tail_from_counts(long hits, long trials, double bound, std::string context) {
  TailReport r;
  r.trials = trials;
  r.hits = hits;
  r.empirical = trials ? double(hits) / double(trials) : 0.0;
  r.ci = wilson_interval(static_cast<std::uint64_t>(hits), static_cast<std::uint64_t>(trials));
  r.bound = bound;
  r.pass = bound >= 1.0 || r.ci.high <= bound;
  r.context = std::move(context);
  return r;
}

/// Applies the CI policy: a near tie (point estimate below the bound, upper
/// limit above it) is rerun once with ten times the trials.
template <typename Rerun>
TailReport settle_tail(TailReport first, Rerun&& rerun) {
  if (first.pass || first.empirical > first.bound) return first;
  TailReport second = rerun(first.trials * 10);
  second.escalated = true;
  if (!second.pass && second.empirical <= second.bound) second.indeterminate = true;
  return second;
}

struct CovarianceSample {
  RealVector<double> eigenvalues;  // of Sigma - I, descending
  double max_summand_norm = 0;
  bool bernstein_ok = true;
};

CovarianceSample draw_covariance_sample(const CovarianceExperiment& exp, RngStream s,
                                        const std::vector<double>& bernstein_cs) {
  const CMat x = ginibre_complex<double>(exp.n, exp.k, s);
  const HMat m = covariance(x).shifted(-1.0);
  CovarianceSample out;
  out.eigenvalues = herm_eigenvalues(m);
  for (Index p = 0; p < exp.n; ++p) {
    const double r2 = x.row(p).squaredNorm();
    const double nrm = std::max(std::abs(r2 - 1.0), exp.k > 1 ? 1.0 : 0.0) / double(exp.n);
    out.max_summand_norm = std::max(out.max_summand_norm, nrm);
  }
  for (double c : bernstein_cs) {
    for (double sign : {1.0, -1.0}) {
      const HMat e = expm(m * (sign * c));
      const double top = herm_eigenvalues(e)(0);
      if (top > e.trace() * (1.0 + 1e-12)) out.bernstein_ok = false;
    }
  }
  return out;
}

}  // namespace

void CovarianceExperiment::validate() const {
  if (k < 1 || k > n) throw DomainError("CovarianceExperiment: need 1 <= k <= N");
  if (!(epsilon >= 0)) throw DomainError("CovarianceExperiment: epsilon must be >= 0");
  if (c && !(*c > 0)) throw DomainError("CovarianceExperiment: c must be > 0");
  if (trials < 1) throw DomainError("CovarianceExperiment: trials must be >= 1");
}

HermitianMatrix<double> covariance(const ComplexMatrix<double>& x_block) {
  if (x_block.rows() < x_block.cols() || x_block.cols() < 1) {
    throw DimensionError("covariance: expected an N x k block with N >= k >= 1");
  }
  return HMat(x_block.adjoint() * x_block / double(x_block.rows()));
}

HermitianMatrix<double> covariance_rank_one(const ComplexMatrix<double>& x_block) {
  if (x_block.rows() < x_block.cols() || x_block.cols() < 1) {
    throw DimensionError("covariance_rank_one: expected an N x k block with N >= k >= 1");
  }
  const Index k = x_block.cols();
  CMat sum = CMat::Zero(k, k);
  for (Index p = 0; p < x_block.rows(); ++p) sum += x_block.row(p).adjoint() * x_block.row(p);
  return HMat(sum / double(x_block.rows()));
}

CovarianceTail empirical_tail(const CovarianceExperiment& exp, const RngStream& stream) {
  exp.validate();
  const std::vector<double> cs = exp.c ? std::vector<double>{*exp.c} : std::vector<double>{0.5, 1.0, 2.0};
  const auto samples = map_trials(exp.trials, [&](std::int64_t i) {
    return draw_covariance_sample(exp, stream.child(static_cast<std::uint64_t>(i)), cs);
  });

  CovarianceTail t;
  t.trials = exp.trials;
  t.bernstein_c = cs.front();
  for (const auto& s : samples) {
    const double top = s.eigenvalues(0);
    const double bottom = s.eigenvalues(s.eigenvalues.size() - 1);
    const bool two = std::max(top, -bottom) > exp.epsilon;
    const bool up = top > exp.epsilon;
    const bool down = -bottom > exp.epsilon;
    t.two_sided_hits += two;
    t.upper_hits += up;
    t.lower_hits += down;
    if (two && !up && !down) t.union_bound_holds = false;
    if (!s.bernstein_ok) ++t.bernstein_violations;
    if (s.max_summand_norm > 1.0) ++t.out_of_assumption;
  }
  t.two_sided_ci = wilson_interval(static_cast<std::uint64_t>(t.two_sided_hits), static_cast<std::uint64_t>(t.trials));

  // e^{-c eps} mean Tr e^{+-c M}, minimized over c in log space.
  auto chebyshev = [&](double sign) {
    auto log_bound = [&](double c) {
      std::vector<double> logs;
      logs.reserve(samples.size());
      for (const auto& s : samples) {
        std::vector<double> terms;
        for (Index j = 0; j < s.eigenvalues.size(); ++j) terms.push_back(sign * c * s.eigenvalues(j));
        const double top = *std::max_element(terms.begin(), terms.end());
        double acc = 0;
        for (double v : terms) acc += std::exp(v - top);
        logs.push_back(top + std::log(acc));
      }
      return log_mean_exp(logs) - c * exp.epsilon;
    };
    if (exp.c) return Minimum{*exp.c, log_bound(*exp.c)};
    return golden_section_minimize(log_bound, 1e-6, 40.0 / std::max(exp.epsilon, 0.05), 1e-6);
  };
  const Minimum up = chebyshev(1.0);
  const Minimum down = chebyshev(-1.0);
  t.upper_c = up.x;
  t.lower_c = down.x;
  t.upper_chebyshev_bound = std::exp(up.value);
  t.lower_chebyshev_bound = std::exp(down.value);
  return t;
}

double aw_bound(const CovarianceExperiment& exp, double sigma2) {
  if (!(sigma2 > 0)) throw DomainError("aw_bound: sigma^2 must be > 0");
  const double e = exp.epsilon;
  return double(exp.k) * std::max(std::exp(-e * e / (4.0 * sigma2)), std::exp(-e / 2.0));
}

TailReport aw_domination(const CovarianceExperiment& exp, const RngStream& stream) {
  const double bound = aw_bound(exp, gaussian_row_variance_proxy(exp.n, exp.k));
  const std::string context = "Eq.RU N=" + std::to_string(exp.n) + " k=" + std::to_string(exp.k) +
                              " eps=" + std::to_string(exp.epsilon);
  const CovarianceTail t = empirical_tail(exp, stream);
  TailReport first = tail_from_counts(t.two_sided_hits, t.trials, bound, context);
  return settle_tail(first, [&](long trials) {
    CovarianceExperiment bigger = exp;
    bigger.trials = trials;
    const CovarianceTail t2 = empirical_tail(bigger, stream.child(kEscalationStream));
    return tail_from_counts(t2.two_sided_hits, t2.trials, bound, context);
  });
}

double variance_proxy(const std::vector<HermitianMatrix<double>>& second_moments) {
  double s = 0;
  for (const auto& m : second_moments) s += operator_norm(m);
  return s;
}

double gaussian_row_variance_proxy(Index n, Index k) {
  if (n < 1 || k < 1) throw DomainError("gaussian_row_variance_proxy: need N, k >= 1");
  return double(k) / double(n);
}

VarianceEstimate monte_carlo_variance_proxy(Index n, Index k, long draws, const RngStream& stream) {
  if (draws < 2) throw DomainError("monte_carlo_variance_proxy: need at least 2 draws");
  const auto squares = map_trials(draws, [&](std::int64_t i) {
    RngStream s = stream.child(static_cast<std::uint64_t>(i));
    const CMat x = ginibre_complex<double>(1, k, s);
    const CMat sl = (x.adjoint() * x - CMat::Identity(k, k)) / double(n);
    return CMat(sl * sl);
  });
  CMat mean = CMat::Zero(k, k);
  for (const auto& m : squares) mean += m;
  mean /= double(draws);
  const Spectrum<double> sp = herm_eigen(HMat(mean));
  const ComplexVector<double> v = sp.basis.col(0);
  RunningStats proj;
  for (const auto& m : squares) proj.push((v.adjoint() * m * v)(0).real());
  VarianceEstimate out;
  out.sigma2 = double(n) * sp.max();
  out.standard_error = double(n) * proj.standard_error();
  out.draws = draws;
  return out;
}

double gaussian_row_mgf_factor(Index n, Index k, double mu) {
  const double nn = double(n);
  if (!(mu < nn)) throw DomainError("gaussian_row_mgf_factor: requires mu < N");
  return std::exp(-mu / nn) * (1.0 + (std::pow(1.0 - mu / nn, -double(k)) - 1.0) / double(k));
}

MonteCarloGap aw_mgf_lemma_check(const CovarianceExperiment& exp, double mu, const RngStream& stream) {
  exp.validate();
  if (exp.k > 3 || exp.n > 8) throw DomainError("aw_mgf_lemma_check: limited to k <= 3 and N <= 8");
  const Index n = exp.n, k = exp.k;

  const RngStream lhs_stream = stream.child(0);
  const auto lhs_samples = map_trials(exp.trials, [&](std::int64_t i) {
    RngStream s = lhs_stream.child(static_cast<std::uint64_t>(i));
    const HMat m = covariance(ginibre_complex<double>(n, k, s)).shifted(-1.0);
    const RealVector<double> ev = herm_eigenvalues(m);
    double tr = 0;
    for (Index j = 0; j < ev.size(); ++j) tr += std::exp(mu * ev(j));
    return tr;
  });
  RunningStats lhs;
  for (double v : lhs_samples) lhs.push(v);

  const RngStream rhs_stream = stream.child(1);
  const auto factors = map_trials(exp.trials, [&](std::int64_t i) {
    RngStream s = rhs_stream.child(static_cast<std::uint64_t>(i));
    const CMat x = ginibre_complex<double>(1, k, s);
    return expm(HMat((x.adjoint() * x - CMat::Identity(k, k)) * (mu / double(n)))).matrix();
  });
  CMat mean = CMat::Zero(k, k);
  for (const auto& f : factors) mean += f;
  mean /= double(exp.trials);
  const Spectrum<double> sp = herm_eigen(HMat(mean));
  const double factor = std::max(sp.max(), -sp.min());
  const ComplexVector<double> v = sp.basis.col(0);
  RunningStats proj;
  for (const auto& f : factors) proj.push((v.adjoint() * f * v)(0).real());

  const double rhs = double(k) * std::pow(factor, double(n));
  const double rhs_se = double(k) * double(n) * std::pow(factor, double(n - 1)) * proj.standard_error();
  MonteCarloGap out;
  out.lhs_se = lhs.standard_error();
  out.rhs_se = rhs_se;
  const double ci = kZ95 * std::hypot(out.lhs_se, out.rhs_se);
  const double slack = kInequalityRelTol * std::max({1.0, std::abs(lhs.mean()), std::abs(rhs)});
  out.gap = GapReport::with_tolerance(lhs.mean(), rhs, ci + slack,
                                      "Eq.GTE N=" + std::to_string(n) + " k=" + std::to_string(k) +
                                          " mu=" + std::to_string(mu));
  out.separated = out.gap.margin > ci;
  return out;
}

BernsteinBound aw_chernoff_bound(Index n, Index k, double epsilon) {
  if (!(epsilon > 0)) throw DomainError("aw_chernoff_bound: epsilon must be > 0");
  const double nn = double(n);
  auto log_bound = [&](double c) {
    const double up = nn * std::log(gaussian_row_mgf_factor(n, k, c));
    const double down = nn * std::log(gaussian_row_mgf_factor(n, k, -c));
    const double top = std::max(up, down);
    return std::log(double(k)) - c * epsilon + top + std::log(std::exp(up - top) + std::exp(down - top));
  };
  const Minimum m = golden_section_minimize(log_bound, 1e-9, nn * (1.0 - 1e-9), 1e-10);
  return {std::exp(m.value), m.x};
}

void MatrixSeries::validate() const {
  for (const auto& t : terms) {
    if (t.dim() != terms.front().dim()) throw DimensionError("MatrixSeries: all terms must share one dimension");
  }
}

HermitianMatrix<double> MatrixSeries::square_sum() const {
  validate();
  if (terms.empty()) throw DomainError("MatrixSeries::square_sum: empty series");
  CMat s = CMat::Zero(dim(), dim());
  for (const auto& t : terms) s += t.matrix() * t.matrix();
  return HMat(s);
}

namespace {

double trace_exp(const HMat& m) {
  const RealVector<double> ev = herm_eigenvalues(m);
  double s = 0;
  for (Index i = 0; i < ev.size(); ++i) s += std::exp(ev(i));
  return s;
}

/// Exact mean of Tr e^{mu Z} over all sign patterns, in Gray-code order.
double enumerate_mgf(const MatrixSeries& series) {
  const int n = static_cast<int>(series.terms.size());
  const Index d = series.dim();
  std::vector<int> eps(static_cast<std::size_t>(n), -1);
  auto fresh = [&] {
    CMat z = CMat::Zero(d, d);
    for (int p = 0; p < n; ++p) z += double(eps[static_cast<std::size_t>(p)]) * series.terms[static_cast<std::size_t>(p)].matrix();
    return z;
  };
  CMat z = fresh();
  double total = trace_exp(HMat(z * series.mu));
  const std::uint64_t patterns = std::uint64_t{1} << n;
  for (std::uint64_t g = 1; g < patterns; ++g) {
    const int bit = __builtin_ctzll(g);
    int& e = eps[static_cast<std::size_t>(bit)];
    e = -e;
    if (g % 256 == 0) {
      z = fresh();
    } else {
      z += 2.0 * double(e) * series.terms[static_cast<std::size_t>(bit)].matrix();
    }
    total += trace_exp(HMat(z * series.mu));
  }
  return total / double(patterns);
}

}  // namespace

MonteCarloGap oliveira_mgf_check(const MatrixSeries& series, ExpectationMode mode, const RngStream& stream,
                                 long trials) {
  series.validate();
  if (series.terms.empty()) throw DomainError("oliveira_mgf_check: empty series");
  const double mu = series.mu;
  const double rhs = trace_exp(series.square_sum() * (mu * mu / 2.0));
  const std::string context = "Eq.OB N=" + std::to_string(series.terms.size()) + " d=" +
                              std::to_string(series.dim()) + " mu=" + std::to_string(mu);
  MonteCarloGap out;
  if (mode == ExpectationMode::enumerate) {
    if (series.sign_kind != SignKind::rademacher) {
      throw DomainError("oliveira_mgf_check: enumeration requires Rademacher signs");
    }
    if (static_cast<int>(series.terms.size()) > kMaxEnumerationTerms) {
      throw ResourceGuardError("oliveira_mgf_check: enumeration limited to N <= " +
                               std::to_string(kMaxEnumerationTerms));
    }
    out.gap = GapReport::make(enumerate_mgf(series), rhs, context);
    out.separated = out.gap.margin > out.gap.tol;
    return out;
  }
  if (trials < 10000) throw DomainError("oliveira_mgf_check: Monte Carlo mode needs >= 1e4 trials");
  const auto values = map_trials(trials, [&](std::int64_t i) {
    RngStream s = stream.child(static_cast<std::uint64_t>(i));
    CMat z = CMat::Zero(series.dim(), series.dim());
    for (const auto& t : series.terms) {
      const double e = series.sign_kind == SignKind::rademacher ? double(s.rademacher()) : s.std_normal();
      z += e * t.matrix();
    }
    return trace_exp(HMat(z * mu));
  });
  RunningStats lhs;
  for (double v : values) lhs.push(v);
  out.lhs_se = lhs.standard_error();
  const double ci = kZ95 * out.lhs_se;
  const double slack = kInequalityRelTol * std::max({1.0, std::abs(lhs.mean()), std::abs(rhs)});
  out.gap = GapReport::with_tolerance(lhs.mean(), rhs, ci + slack, context + " montecarlo");
  out.separated = out.gap.margin > ci;
  return out;
}

std::vector<double> oliveira_recursion(const MatrixSeries& series) {
  series.validate();
  if (series.sign_kind != SignKind::rademacher) {
    throw DomainError("oliveira_recursion: enumeration requires Rademacher signs");
  }
  const int n = static_cast<int>(series.terms.size());
  if (n > kMaxEnumerationTerms) {
    throw ResourceGuardError("oliveira_recursion: enumeration limited to N <= " + std::to_string(kMaxEnumerationTerms));
  }
  const double mu = series.mu;
  const CMat d0 = series.square_sum().matrix() * (mu * mu / 2.0);
  std::vector<double> seq;
  for (int j = 0; j <= n; ++j) {
    CMat base = d0;
    for (int p = 0; p < j; ++p) {
      const CMat& a = series.terms[static_cast<std::size_t>(p)].matrix();
      base -= (mu * mu / 2.0) * a * a;
    }
    const std::uint64_t patterns = std::uint64_t{1} << j;
    double total = 0;
    for (std::uint64_t g = 0; g < patterns; ++g) {
      CMat dj = base;
      for (int p = 0; p < j; ++p) {
        const double e = ((g >> p) & 1u) != 0 ? 1.0 : -1.0;
        dj += (mu * e) * series.terms[static_cast<std::size_t>(p)].matrix();
      }
      total += trace_exp(HMat(dj));
    }
    seq.push_back(total / double(patterns));
  }
  return seq;
}

GapReport mgf_factor_check(const HermitianMatrix<double>& a, double mu, SignKind sign_kind) {
  // Every factor is a function of A, so the product is evaluated on its spectrum.
  const bool rademacher = sign_kind == SignKind::rademacher;
  const RealVector<double> ev = herm_eigenvalues(a);
  double nrm = 0;
  for (Index i = 0; i < ev.size(); ++i) {
    const double x = mu * ev(i);
    const double f = rademacher ? std::exp(-x * x / 2.0) * std::cosh(x) : 1.0;
    nrm = std::max(nrm, std::abs(f));
  }
  return GapReport::with_tolerance(nrm, 1.0, 1e-12,
                                   std::string("Eq.DD1 ") + (rademacher ? "rademacher" : "gaussian") +
                                       " mu=" + std::to_string(mu));
}

GapReport oliveira_vs_aw(const MatrixSeries& series) {
  series.validate();
  if (series.terms.empty()) throw DomainError("oliveira_vs_aw: empty series");
  const double mu = series.mu;
  const double lhs = trace_exp(series.square_sum() * (mu * mu / 2.0));
  double s = 0;
  for (const auto& t : series.terms) s += operator_norm(t.squared());
  const double rhs = double(series.dim()) * std::exp(mu * mu * s);
  return GapReport::make(lhs, rhs, "Eq.OB-vs-AW mu=" + std::to_string(mu));
}

GapReport trace_norm_step(const HermitianMatrix<double>& p, const HermitianMatrix<double>& q) {
  require_same_dim(p.matrix(), q.matrix(), "trace_norm_step");
  if (!(herm_eigenvalues(p).minCoeff() > 0)) throw DomainError("trace_norm_step: P must be positive definite");
  const double lhs = real_trace<double>(CMat(p.matrix() * q.matrix()));
  const double rhs = operator_norm(q) * p.trace();
  return GapReport::make(lhs, rhs, "Eq.4.29");
}

TailReport scalar_chernoff(const ScalarChernoffParams& params, const RngStream& stream) {
  if (params.n < 1 || params.trials < 1) throw DomainError("scalar_chernoff: N and trials must be >= 1");
  if (!(params.sigma2 >= 0)) throw DomainError("scalar_chernoff: sigma^2 must be >= 0");
  const double var = params.sigma2 / double(params.n);
  if (var > 1.0) {
    throw DomainError("scalar_chernoff: per-variable variance sigma^2/N > 1 is not realizable in [-1, 1]");
  }
  const double v = std::sqrt(var);
  const double e = params.epsilon;
  const double bound = std::max(std::exp(-e * e / 4.0), std::exp(-e * std::sqrt(params.sigma2) / 2.0));
  const std::string context = "Eq.C N=" + std::to_string(params.n) + " sigma2=" + std::to_string(params.sigma2) +
                              " eps=" + std::to_string(e);
  auto run = [&](long trials, const RngStream& base) {
    const auto hits = map_trials(trials, [&](std::int64_t i) {
      RngStream s = base.child(static_cast<std::uint64_t>(i));
      long plus = 0;
      for (long p = 0; p < params.n; ++p) plus += s.rademacher() > 0;
      const double sum = v * double(2 * plus - params.n);
      return static_cast<int>(sum >= e);
    });
    long h = 0;
    for (int x : hits) h += x;
    return tail_from_counts(h, trials, bound, context);
  };
  return settle_tail(run(params.trials, stream),
                     [&](long trials) { return run(trials, stream.child(kEscalationStream)); });
}

}  // namespace gtlab
