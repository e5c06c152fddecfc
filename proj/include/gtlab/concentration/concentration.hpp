#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtlab/core.hpp"
#include "gtlab/inequalities/gap_report.hpp"
#include "gtlab/numerics/statistics.hpp"
#include "gtlab/random/rng.hpp"

namespace gtlab {

/// A requested computation exceeds a configured cost guard.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sigma = X^dagger X / N for the first k columns X of an N x N complex
/// Gaussian matrix, compared against E Sigma = I_k.
struct CovarianceExperiment {
  Index n = 8;
  Index k = 1;
  double epsilon = 1;
  /// Bernstein exponent; chosen by golden-section search when absent.
  std::optional<double> c;
  long trials = 10000;

  void validate() const;
};

/// Monte Carlo tail probability against an analytic bound.
struct TailReport {
  long trials = 0;
  long hits = 0;
  double empirical = 0;
  Interval ci;
  double bound = 1;
  /// ci.high <= bound, or the bound is vacuous (>= 1).
  bool pass = true;
  /// The point estimate sits below the bound but the interval straddles it,
  /// even after escalating the trial count.
  bool indeterminate = false;
  bool escalated = false;
  std::string context;
};

/// Statistics of one covariance experiment.
struct CovarianceTail {
  long trials = 0;
  long two_sided_hits = 0;  // ||Sigma - I||_op > eps
  long upper_hits = 0;      // lambda_max(Sigma - I) > eps
  long lower_hits = 0;      // -lambda_min(Sigma - I) > eps
  Interval two_sided_ci;
  /// Every two-sided hit is also a one-sided hit.
  bool union_bound_holds = true;
  /// Trials violating e^{c lambda_max} <= Tr e^{c (Sigma - I)} (and the -c mirror).
  long bernstein_violations = 0;
  double bernstein_c = 0;
  /// e^{-c eps} E Tr e^{+-c (Sigma - I)} at the minimizing c, from the same samples.
  double upper_chebyshev_bound = 1;
  double lower_chebyshev_bound = 1;
  double upper_c = 0;
  double lower_c = 0;
  /// Trials in which some summand had ||S^(l)||_op > 1.
  long out_of_assumption = 0;

  double two_sided_frequency() const { return trials ? double(two_sided_hits) / double(trials) : 0.0; }
  double upper_frequency() const { return trials ? double(upper_hits) / double(trials) : 0.0; }
  double lower_frequency() const { return trials ? double(lower_hits) / double(trials) : 0.0; }
};

/// Sigma = X^dagger X / N for an N x k block.
HermitianMatrix<double> covariance(const ComplexMatrix<double>& x_block);

/// Sigma as the average of the rank-one row products (X^(p))^dagger X^(p).
HermitianMatrix<double> covariance_rank_one(const ComplexMatrix<double>& x_block);

CovarianceTail empirical_tail(const CovarianceExperiment& exp, const RngStream& stream);

/// k max(e^{-eps^2/(4 sigma^2)}, e^{-eps/2}).
double aw_bound(const CovarianceExperiment& exp, double sigma2);

/// Monte Carlo tail against aw_bound with the Gaussian-row variance proxy.
/// Near ties escalate the trial count ten-fold once.
TailReport aw_domination(const CovarianceExperiment& exp, const RngStream& stream);

/// sigma^2 = sum_l ||E (S^(l))^2||_op from the summands' second-moment matrices.
double variance_proxy(const std::vector<HermitianMatrix<double>>& second_moments);

/// Closed form for Gaussian rows: E (S^(l))^2 = (k / N^2) I_k, so sigma^2 = k / N.
double gaussian_row_variance_proxy(Index n, Index k);

struct VarianceEstimate {
  double sigma2 = 0;
  double standard_error = 0;
  long draws = 0;
};

/// Monte Carlo estimate of the Gaussian-row variance proxy from `draws`
/// independent rows (all N summands are identically distributed).
VarianceEstimate monte_carlo_variance_proxy(Index n, Index k, long draws, const RngStream& stream);

/// Both sides of a Monte Carlo inequality with their standard errors.
struct MonteCarloGap {
  GapReport gap;
  double lhs_se = 0;
  double rhs_se = 0;
  /// rhs - lhs exceeds 1.96 combined standard errors.
  bool separated = false;
};

/// ||E e^{mu S}||_op for S = (x^dagger x - I_k)/N with a Gaussian row x; closed
/// form e^{-mu/N} (1 + ((1 - mu/N)^{-k} - 1)/k), valid for mu < N.
double gaussian_row_mgf_factor(Index n, Index k, double mu);

/// E Tr e^{mu (Sigma - I_k)} <= k prod_p ||E e^{mu S^(p)}||_op with both sides by
/// Monte Carlo. Limited to k <= 3, N <= 8.
MonteCarloGap aw_mgf_lemma_check(const CovarianceExperiment& exp, double mu, const RngStream& stream);

/// Eq. rf chain with the optimal Bernstein exponent: k e^{-c eps}(prod ||E e^{cS}|| +
/// prod ||E e^{-cS}||), minimized over c by golden-section search.
struct BernsteinBound {
  double bound = 1;
  double c = 0;
};
BernsteinBound aw_chernoff_bound(Index n, Index k, double epsilon);

enum class SignKind { rademacher, gaussian };

/// Z = sum_p eps_p A^(p) for fixed Hermitian d x d terms and random signs.
struct MatrixSeries {
  std::vector<HermitianMatrix<double>> terms;
  SignKind sign_kind = SignKind::rademacher;
  double mu = 1;

  Index dim() const { return terms.empty() ? 0 : terms.front().dim(); }
  void validate() const;
  /// sum_p (A^(p))^2.
  HermitianMatrix<double> square_sum() const;
};

/// Largest series length accepted by exhaustive sign enumeration.
inline constexpr int kMaxEnumerationTerms = 14;

enum class ExpectationMode { enumerate, montecarlo };

/// E Tr e^{mu Z} <= Tr e^{(mu^2/2) sum_p (A^(p))^2}.
MonteCarloGap oliveira_mgf_check(const MatrixSeries& series, ExpectationMode mode, const RngStream& stream,
                                 long trials = 10000);

/// E Tr e^{D^(j)}, j = 0..N, by enumeration, where
/// D^(j) = (mu^2/2) sum_p A_p^2 + sum_{p<=j} (mu eps_p A_p - (mu^2/2) A_p^2).
/// The sequence is non-increasing; entry 0 is the bound, entry N is E Tr e^{mu Z}.
std::vector<double> oliveira_recursion(const MatrixSeries& series);

/// ||e^{-mu^2 A^2/2} E e^{mu eps A}||_op <= 1.
GapReport mgf_factor_check(const HermitianMatrix<double>& a, double mu, SignKind sign_kind);

/// Tr e^{(mu^2/2) sum A^2} <= d e^{mu^2 sum ||A^2||_op}.
GapReport oliveira_vs_aw(const MatrixSeries& series);

/// Tr(P Q) <= ||Q||_op Tr P for positive definite P and Hermitian Q.
GapReport trace_norm_step(const HermitianMatrix<double>& p, const HermitianMatrix<double>& q);

struct ScalarChernoffParams {
  long n = 20;
  double sigma2 = 1;
  double epsilon = 1;
  long trials = 100000;
};

/// Sum of N symmetric two-point variables +-sqrt(sigma^2/N) against
/// max(e^{-eps^2/4}, e^{-eps sigma/2}).
TailReport scalar_chernoff(const ScalarChernoffParams& params, const RngStream& stream);

}  // namespace gtlab
