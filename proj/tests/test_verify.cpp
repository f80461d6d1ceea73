#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "checks.hpp"
#include "integrate.hpp"
#include "prime_table.hpp"
#include "report.hpp"

using namespace ds;
using namespace ds::verify;

namespace {

RunConfig small_cfg() {
  RunConfig cfg;
  cfg.sieve_limit = 1'000'000;
  cfg.smoothing_nmax = 120;
  cfg.proposition_xmax = 10'000;
  cfg.mean_xmax = 10'000;
  cfg.pi_li_grid_max = 100'000;
  cfg.class_windows = 4;
  return cfg;
}

}  // namespace

TEST_CASE("registry lists the full check set") {
  for (const char *id :
       {"L2.1", "L2.2", "L2.3", "L2.4", "L2.5", "L2.6", "L2.7", "L2.8",
        "L2.9", "L2.10", "L2.11", "L3.2", "L3.3", "L3.4", "L3.5", "L3.6",
        "L3.7", "L3.8", "P3.1", "P3.1-integral", "KAPPA", "MAIN", "COR1.2",
        "COR1.3", "CLASS"})
    CHECK(is_registered_check(id));
  CHECK(!is_registered_check("L9.9"));
}

TEST_CASE("unknown ids are usage errors") {
  Context ctx(small_cfg());
  CHECK_THROWS_AS(run_check(ctx, "BOGUS", {}), ds::usage_error);
}

TEST_CASE("L2.4 handles the N = 1 equality edge") {
  Context ctx(small_cfg());
  auto r = run_check(ctx, "L2.4", Budget::from_config(ctx.cfg()));
  CHECK(r.passed);
  CHECK(r.min_margin > 0.0);  // default grid starts at N = 2
  Budget b = Budget::from_config(ctx.cfg());
  b.axes["N"] = {1.0};
  auto edge = run_check(ctx, "L2.4", b);
  CHECK(edge.min_margin == 0.0);
  CHECK(edge.passed);  // <=-lemma, margin 0 passes
  CHECK(!edge.strict);
}

TEST_CASE("L2.8 frozen point") {
  Context ctx(small_cfg());
  Budget b = Budget::from_config(ctx.cfg());
  b.axes["k"] = {2.0};
  b.axes["l"] = {1.0};
  b.axes["A"] = {3.0};
  auto r = run_check(ctx, "L2.8", b);
  // sum_{r=2..3} r 2^(5r) = 100352 against 3 max(3, 2*2^15) = 196608
  CHECK(r.min_margin ==
        doctest::Approx(std::log(196608.0 / 100352.0)).epsilon(1e-9));
  CHECK(r.passed);
}

TEST_CASE("reports are deterministic") {
  Context ctx(small_cfg());
  Budget b = Budget::from_config(ctx.cfg());
  auto r1 = run_check(ctx, "L2.9", b);
  auto r2 = run_check(ctx, "L2.9", b);
  CHECK(r1.min_margin == r2.min_margin);
  CHECK(r1.witness == r2.witness);
  CHECK(to_json({r1}, {}) == to_json({r2}, {}));
}

TEST_CASE("report json carries the schema") {
  Context ctx(small_cfg());
  auto r = run_check(ctx, "L2.2", Budget::from_config(ctx.cfg()));
  auto j = nlohmann::json::parse(to_json({r}, {{"k", "v"}}));
  auto &c = j["checks"][0];
  for (const char *key : {"check_id", "paper_anchor", "kind", "grid",
                          "points_checked", "min_margin", "margin_scale",
                          "witness", "passed"})
    CHECK(c.contains(key));
  CHECK(j["summary"]["failed"] == 0);
  // csv flattening has one row per check plus header
  auto csv = to_csv({r});
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("pi/li and mertens finite checks") {
  Context ctx(small_cfg());
  auto &t = ctx.table();
  CHECK(t.nth_prime(384) == 2657);
  CHECK(t.nth_prime(31) == 127);
  CHECK(t.nth_prime(62) == 293);
  auto r = check_pi_li(ctx, 2.0, 50'000.0);
  CHECK(r.passed);
  CHECK(r.min_margin > 0.0);
  auto m = check_mertens_B(ctx, {127.0, 293.0, 1e5});
  CHECK(m.passed);
  CHECK_THROWS_AS(check_mertens_B(ctx, {100.0}), ds::domain_error);
}

TEST_CASE("tau mertens bound exercises all branches") {
  Context ctx(small_cfg());
  auto r = check_tau_mertens(ctx, 1e4, lin_spaced(0.0, 1.0, 21),
                             std::exp(8.2), 0.6 * 8.2);
  CHECK(r.passed);
  CHECK(r.note.find("/0/") == std::string::npos);  // every branch hit
  CHECK_THROWS_AS(
      check_tau_mertens(ctx, 1e4, {1.5}, std::exp(8.2), 0.6 * 8.2),
      ds::domain_error);
}

TEST_CASE("smoothing bound, small range, with the closed form for n = 2") {
  Context ctx(small_cfg());
  auto r = check_smoothing(ctx, 50);
  CHECK(r.passed);
  // (1/sin 1) int_0^1 |tau(2;v)| dv = (4/log 2) sin(log2/2) / sin 1
  double closed =
      4.0 / std::log(2.0) * std::sin(std::log(2.0) / 2.0) / std::sin(1.0);
  CHECK(closed == doctest::Approx(2.3294833).epsilon(1e-6));
  auto q = sf::quad(
      [](double v) {
        return 2.0 * std::fabs(std::cos(v * std::log(2.0) / 2.0));
      },
      0.0, 1.0, 1e-10);
  CHECK(q.value / std::sin(1.0) == doctest::Approx(closed).epsilon(1e-9));
}

TEST_CASE("mean-value bound at desk scale") {
  Context ctx(small_cfg());
  auto r = check_mean_bound(ctx, 1.0, 1e4);
  CHECK(r.passed);
  auto r0 = check_mean_bound(ctx, 0.0, 100.0);
  CHECK(r0.passed);
  CHECK_THROWS_AS(check_mean_bound(ctx, 1.5, 100.0), ds::domain_error);
}

TEST_CASE("proposition check at reduced scale") {
  Context ctx(small_cfg());
  auto r = check_proposition(ctx, {100.0, 1000.0, 10'000.0},
                             {0.0, 0.5, 1.0});
  CHECK(r.passed);
  CHECK(r.min_margin > 0.0);
}

TEST_CASE("window classification") {
  Context ctx(small_cfg());
  auto f = arith::FunctionId::parse("delta");
  auto wc = classify_window(ctx, 10'100.0, 100.0, f);
  CHECK(wc.members.size() == 100);
  u64 sizes = 0;
  for (auto s : wc.class_sizes) sizes += s;
  CHECK(sizes == wc.members.size());
  // a prime above z lands in class I with a_n = 1
  bool found_prime = false;
  for (auto &mem : wc.members) {
    if (mem.n == 10'007) {  // prime
      found_prime = true;
      CHECK(mem.a == 1);
      CHECK(mem.cls == WindowClass::I);
    }
  }
  CHECK(found_prime);
  double direct = arith::short_sum(f, 10'100.0, 100.0);
  CHECK(wc.class_sums[0] + wc.class_sums[1] + wc.class_sums[2] +
            wc.class_sums[3] ==
        direct);
  CHECK_THROWS_AS(classify_window(ctx, 100.0, 4.0, f), ds::domain_error);
}

TEST_CASE("corollary checks") {
  Context ctx(small_cfg());
  auto r = check_corollaries(ctx, 6.0, 1e5, 100.0, 0);
  CHECK(r.passed);
  auto rj = check_corollaries(ctx, 6.0, 1e5, 100.0, 2);
  CHECK(rj.passed);
  // y = 0 windows pass trivially with a clamped margin
  auto r0 = check_corollaries(ctx, 6.0, 1e5, 0.0, 0);
  CHECK(r0.passed);
  CHECK(r0.min_margin == kMarginClamp);
}

TEST_CASE("rankin chain point") {
  Context ctx(small_cfg());
  auto f = arith::FunctionId::parse("tau2");
  auto r = rankin_chain_check(ctx, 1e4, 10.0, 0.5, 2, f);
  CHECK(r.passed);
  CHECK_THROWS_AS(rankin_chain_check(ctx, 1e4, 10.0, 0.0, 2, f),
                  ds::domain_error);
}

TEST_CASE("config parsing") {
  auto cfg = RunConfig::parse(
      "sieve_limit=2e6\n# comment\nformat=csv\ntol.KAPPA=1e-9\n"
      "grid.alpha=3..10\n");
  CHECK(cfg.sieve_limit == 2'000'000);
  CHECK(cfg.format == "csv");
  CHECK(cfg.tol("KAPPA", 1e-8) == 1e-9);
  CHECK(cfg.grid_override.at("alpha").size() == 8);
  CHECK(cfg.grid_override.at("alpha").front() == 3.0);
  CHECK_THROWS_AS(RunConfig::parse("tol.BOGUS=1\n"), ds::usage_error);
  CHECK_THROWS_AS(RunConfig::parse("nonsense=1\n"), ds::usage_error);
  CHECK_THROWS_AS(RunConfig::parse("format=xml\n"), ds::usage_error);
  CHECK_THROWS_AS(RunConfig::parse("weird line\n"), ds::usage_error);
}

TEST_CASE("grid override drives L2.5 dispatch") {
  Context ctx(small_cfg());
  Budget b = Budget::from_config(ctx.cfg());
  b.axes["alpha"] = {3.0};
  b.axes["x"] = {100.0};
  auto r = run_check(ctx, "L2.5", b);
  CHECK(r.points_checked == 1);
  CHECK(r.passed);
  CHECK(r.witness.at("alpha") == 3.0);
  CHECK(r.witness.at("x") == 100.0);
}

TEST_CASE("margin witnesses reproduce under re-evaluation") {
  Context ctx(small_cfg());
  Budget b = Budget::from_config(ctx.cfg());
  for (const char *id : {"L2.2", "L2.5", "L2.6", "L3.7"}) {
    auto r1 = run_check(ctx, id, b);
    auto r2 = run_check(ctx, id, b);
    CHECK(std::fabs(r1.min_margin - r2.min_margin) <= 1e-9);
    CHECK(r1.witness == r2.witness);
  }
}
