#pragma once

#include <algorithm>
#include <cmath>
#include <string>

namespace gtlab {

/// Relative slack admitted by every exact inequality check.
inline constexpr double kInequalityRelTol = 1e-9;

/// Both sides of an inequality lhs <= rhs, evaluated. pass <=> margin >= -tol.
struct GapReport {
  double lhs = 0;
  double rhs = 0;
  double margin = 0;
  double tol = 0;
  bool pass = true;
  std::string context;

  /// tol = rel_tol * max(1, |lhs|, |rhs|).
  static GapReport make(double lhs, double rhs, std::string context, double rel_tol = kInequalityRelTol) {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return with_tolerance(lhs, rhs, rel_tol * scale, std::move(context));
  }

  static GapReport with_tolerance(double lhs, double rhs, double tol, std::string context) {
    GapReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.tol = tol;
    r.pass = r.margin >= -tol;
    r.context = std::move(context);
    return r;
  }

  /// Margin divided by the scale used for the tolerance.
  double relative_margin() const { return margin / std::max({1.0, std::abs(lhs), std::abs(rhs)}); }
};

/// Keeps the report with the smallest relative margin.
class WorstGap {
 public:
  void push(const GapReport& r) {
    ++count_;
    if (!r.pass) ++failures_;
    if (!has_ || r.relative_margin() < worst_.relative_margin()) {
      worst_ = r;
      has_ = true;
    }
  }
  bool empty() const noexcept { return !has_; }
  const GapReport& worst() const noexcept { return worst_; }
  long count() const noexcept { return count_; }
  long failures() const noexcept { return failures_; }
  bool all_pass() const noexcept { return failures_ == 0; }

 private:
  GapReport worst_;
  bool has_ = false;
  long count_ = 0;
  long failures_ = 0;
};

}  // namespace gtlab
