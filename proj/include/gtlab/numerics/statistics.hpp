#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace gtlab {

/// Welford running mean and variance.
class RunningStats {
 public:
  void push(double x) noexcept {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }

  std::uint64_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }
  double variance() const noexcept { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  double stddev() const noexcept { return std::sqrt(variance()); }
  double standard_error() const noexcept {
    return n_ > 0 ? std::sqrt(variance() / static_cast<double>(n_)) : std::numeric_limits<double>::infinity();
  }

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

/// Running covariance of a pair, for ratio estimators.
class RunningCovariance {
 public:
  void push(double x, double y) noexcept {
    ++n_;
    const double dx = x - mx_;
    mx_ += dx / static_cast<double>(n_);
    const double dy = y - my_;
    my_ += dy / static_cast<double>(n_);
    cxx_ += dx * (x - mx_);
    cyy_ += dy * (y - my_);
    cxy_ += dx * (y - my_);
  }

  std::uint64_t count() const noexcept { return n_; }
  double mean_x() const noexcept { return mx_; }
  double mean_y() const noexcept { return my_; }
  double var_x() const noexcept { return n_ > 1 ? cxx_ / static_cast<double>(n_ - 1) : 0.0; }
  double var_y() const noexcept { return n_ > 1 ? cyy_ / static_cast<double>(n_ - 1) : 0.0; }
  double cov_xy() const noexcept { return n_ > 1 ? cxy_ / static_cast<double>(n_ - 1) : 0.0; }

  /// Delta-method standard error of mean_x / mean_y.
  double ratio_standard_error() const noexcept {
    const double r = mx_ / my_;
    const double v = (var_x() - 2.0 * r * cov_xy() + r * r * var_y()) / (my_ * my_);
    return std::sqrt(std::max(v, 0.0) / static_cast<double>(n_));
  }

 private:
  std::uint64_t n_ = 0;
  double mx_ = 0, my_ = 0, cxx_ = 0, cyy_ = 0, cxy_ = 0;
};

struct Interval {
  double low = 0;
  double high = 0;
  bool contains(double x) const noexcept { return low <= x && x <= high; }
};

inline constexpr double kZ95 = 1.959963984540054;

/// Wilson score interval for a binomial proportion.
inline Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z = kZ95) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

/// |mean_a - mean_b| in units of the combined standard error.
inline double two_sample_z(const RunningStats& a, const RunningStats& b) {
  const double se = std::hypot(a.standard_error(), b.standard_error());
  const double d = std::abs(a.mean() - b.mean());
  if (se == 0.0) return d == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return d / se;
}

}  // namespace gtlab
