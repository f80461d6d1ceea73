#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "config.hpp"
#include "prime_table.hpp"
#include "report.hpp"
#include "windows.hpp"

namespace ds::verify {

// Grid budget for a single check run. axes overrides a named default grid
// (CLI --grid name=lo..hi[:n]); max_points caps the total grid size by
// deterministic striding; seed drives the random-grid checks.
struct Budget {
  long long max_points = 5'000'000;
  u64 seed = 0x5eed5eedULL;
  std::map<std::string, std::vector<double>> axes;

  std::vector<double> grid(const std::string &name,
                           std::vector<double> dflt) const {
    auto it = axes.find(name);
    return it == axes.end() ? dflt : it->second;
  }
  static Budget from_config(const RunConfig &cfg) {
    return {static_cast<long long>(cfg.eval_budget), cfg.seed,
            cfg.grid_override};
  }
};

// Shared lazily-built state: the prime table and the Delta/omega tables the
// proposition-scale checks reuse. Thread-safe; checks run in parallel.
class Context {
 public:
  explicit Context(RunConfig cfg) : cfg_(std::move(cfg)) {}
  const RunConfig &cfg() const { return cfg_; }
  const primes::PrimeTable &table();
  const arith::DeltaTable &deltas(u64 limit);

 private:
  RunConfig cfg_;
  std::mutex mu_;
  std::unique_ptr<primes::PrimeTable> table_;
  std::unique_ptr<arith::DeltaTable> deltas_;
  u64 deltas_limit_ = 0;
};

struct CheckInfo {
  std::string id;
  std::string anchor;  // the inequality in ASCII math
  std::string kind;    // "statement" | "proof-ingredient"
  bool strict;         // strict lemmas need margin > 0; <=-lemmas allow 0
};

const std::vector<CheckInfo> &check_registry();
bool is_registered_check(const std::string &id);

InequalityReport run_check(Context &ctx, const std::string &id,
                           const Budget &budget);
// Parallel over checks, merged in registry order.
std::vector<InequalityReport> run_checks(Context &ctx,
                                         const std::vector<std::string> &ids,
                                         const Budget &budget);

// ---- individually callable operations ---------------------------------

InequalityReport check_pi_li(Context &ctx, double range_lo, double range_hi);
InequalityReport check_mertens_B(Context &ctx, const std::vector<double> &xs);
InequalityReport check_tau_mertens(Context &ctx, double x,
                                   const std::vector<double> &v_grid, double T,
                                   double q);
InequalityReport check_smoothing(Context &ctx, u64 n_max);
InequalityReport check_mean_bound(Context &ctx, double t, double x);
InequalityReport check_proposition(Context &ctx,
                                   const std::vector<double> &x_list,
                                   const std::vector<double> &t_grid);
InequalityReport check_corollaries(Context &ctx, double ell, double x,
                                   double y, int j);  // j <= 0: absent
// One point of the Rankin / Jordan proof chains; t_or_u is the smoothness
// bound t for chain (i) and the prime cap u for chain (ii).
InequalityReport rankin_chain_check(Context &ctx, double z, double t_or_u,
                                    double a, int k,
                                    const arith::FunctionId &f);

// ---- class decomposition ----------------------------------------------

enum class WindowClass : unsigned char { I = 0, II = 1, III = 2, IV = 3 };

struct WindowMember {
  u64 n;
  u64 a;  // smooth prefix part; b = n/a
  WindowClass cls;
};

struct WindowClassification {
  double x = 0, y = 0, z = 0;  // z = y^(1/3)
  std::vector<WindowMember> members;
  std::array<u64, 4> class_sizes{};
  std::array<double, 4> class_sums{};  // per-class sums of f
  double total = 0;                    // == short_sum(f, x, y)
};

WindowClassification classify_window(Context &ctx, double x, double y,
                                     const arith::FunctionId &f);

}  // namespace ds::verify
