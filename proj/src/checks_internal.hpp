#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "checks.hpp"
#include "errors.hpp"

namespace ds::verify {

// Running minimum of margins with its witness; iteration order is fixed, so
// ties resolve to the first occurrence and reports are deterministic.
struct MarginTracker {
  double min_margin = kInf;
  std::map<std::string, double> witness;
  long long points = 0;

  void observe(double margin,
               std::initializer_list<std::pair<const char *, double>> params) {
    if (!std::isfinite(margin) && margin > 0) margin = kMarginClamp;
    if (!(margin == margin))  // NaN: hard failure, name the point
      throw precision_error("non-finite margin at a grid point");
    ++points;
    if (margin < min_margin) {
      min_margin = margin;
      witness.clear();
      for (auto &[k, v] : params) witness[k] = v;
    }
  }

  InequalityReport finish(const CheckInfo &info, std::string grid) const {
    InequalityReport r;
    r.check_id = info.id;
    r.paper_anchor = info.anchor;
    r.kind = info.kind;
    r.strict = info.strict;
    r.grid_description = std::move(grid);
    r.points_checked = points;
    r.min_margin = std::clamp(min_margin, -kMarginClamp, kMarginClamp);
    r.passed = info.strict ? r.min_margin > 0.0 : r.min_margin >= 0.0;
    return r;
  }
};

// log(RHS) - log(LHS) for positive sides; +clamp when LHS == 0.
inline double log_margin(double lhs, double rhs) {
  if (rhs <= 0.0) return -kMarginClamp;
  if (lhs <= 0.0) return kMarginClamp;
  return std::log(rhs) - std::log(lhs);
}

// log(tol / err) for agreement-type checks.
inline double agree_margin(double err, double tol) {
  err = std::fabs(err);
  if (err == 0.0) return kMarginClamp;
  return std::log(tol) - std::log(err);
}

// Deterministic striding down to at most max_n entries.
inline std::vector<double> thin(std::vector<double> v, long long max_n) {
  if (max_n <= 0 || static_cast<long long>(v.size()) <= max_n) return v;
  std::vector<double> out;
  double step = static_cast<double>(v.size()) / static_cast<double>(max_n);
  for (long long i = 0; i < max_n; ++i)
    out.push_back(v[static_cast<size_t>(i * step)]);
  return out;
}

const CheckInfo &check_info(const std::string &id);

// implemented in checks_hooley.cpp, dispatched from run_check
InequalityReport run_hooley_check(Context &ctx, const std::string &id,
                                  const Budget &b);

}  // namespace ds::verify
