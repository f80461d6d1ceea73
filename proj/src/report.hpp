#pragma once

#include <map>
#include <string>
#include <vector>

namespace ds::verify {

// One verified inequality over a parameter grid. min_margin is
// log(RHS) - log(LHS) when both sides are positive ("log" scale), a plain
// RHS - LHS when the check is naturally linear, or log(tol/err) for
// agreement-type checks; margin_scale records which. Infinite margins
// (LHS = 0) are clamped to kMarginClamp for serialization.
struct InequalityReport {
  std::string check_id;
  std::string paper_anchor;  // the inequality being checked, in ASCII math
  std::string kind;          // "statement" | "proof-ingredient"
  std::string grid_description;
  long long points_checked = 0;
  double min_margin = 0.0;
  std::string margin_scale = "log";
  std::map<std::string, double> witness;  // parameter tuple at min_margin
  bool passed = false;
  bool strict = true;  // pass needs margin > 0; non-strict lemmas allow = 0
  std::string note;    // optional payload (majorants, per-class sums, ...)
};

constexpr double kMarginClamp = 1e308;

std::string to_json(const std::vector<InequalityReport> &reports,
                    const std::map<std::string, std::string> &meta);
std::string to_csv(const std::vector<InequalityReport> &reports);

}  // namespace ds::verify
