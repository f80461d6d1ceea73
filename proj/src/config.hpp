#pragma once

#include <map>
#include <string>
#include <vector>

#include "util.hpp"

namespace ds::verify {

// Run configuration: key=value lines ('#' comments), flags override file
// values. Unknown keys and unknown tolerance-override ids are rejected at
// parse time.
struct RunConfig {
  u64 sieve_limit = 10'000'000;
  u64 eval_budget = 5'000'000;  // per-check grid point cap
  int threads = 0;              // 0 = hardware concurrency
  u64 seed = 0x5eed5eedULL;
  std::string format = "json";  // json | csv
  std::string out = "-";        // "-" = stdout
  std::string sieve_cache;      // optional ESSV1 cache path
  u64 smoothing_nmax = 2000;
  u64 proposition_xmax = 1'000'000;
  u64 mean_xmax = 1'000'000;
  u64 pi_li_grid_max = 1'000'000;
  u64 s1_cutoff = 10'000;
  u64 s2_cutoff = 1'000'000;
  int class_windows = 20;
  std::map<std::string, double> tol_override;  // check_id -> tolerance
  // named axis grids ("grid.alpha=3..10[:n]"), applied by checks that use
  // the axis name
  std::map<std::string, std::vector<double>> grid_override;

  static RunConfig parse(const std::string &text);
  void apply_line(const std::string &line);
  double tol(const std::string &check_id, double dflt) const {
    auto it = tol_override.find(check_id);
    return it == tol_override.end() ? dflt : it->second;
  }
};

}  // namespace ds::verify
