#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "deltasum.h"

TEST_CASE("version and error strings") {
  CHECK(std::string(ds_version()).find("deltasum") == 0);
}

TEST_CASE("prime table lifecycle") {
  ds_prime_table *t = nullptr;
  REQUIRE(ds_prime_table_build(100'000, nullptr, &t) == DS_OK);
  CHECK(ds_prime_table_limit(t) == 100'000);
  CHECK(ds_pi(t, 1e4) == 1229);
  CHECK(ds_nth_prime(t, 384) == 2657);
  CHECK(ds_theta(t, 10.0) == doctest::Approx(std::log(210.0)).epsilon(1e-12));
  double out = 0;
  CHECK(ds_mertens_sum(t, 2.0, &out) == DS_OK);
  CHECK(out == 0.5);
  CHECK(ds_mertens_sum(t, 1e9, &out) == DS_ERR_RANGE);
  CHECK(std::strlen(ds_last_error()) > 0);
  CHECK(ds_prime_power_sum(t, 100.0, 2.0, &out) == DS_ERR_DOMAIN);
  double sums[4];
  int warn = -1;
  CHECK(ds_prime_constant_sums(t, 10'000, sums, &warn) == DS_OK);
  CHECK(sums[0] < 2.92135);
  CHECK(warn == 1);
  ds_prime_table_free(t);
}

TEST_CASE("arith surface") {
  uint64_t v = 0, w = 0;
  REQUIRE(ds_delta(12, &v, &w) == DS_OK);
  CHECK(v == 3);
  CHECK(w == 4);
  CHECK(ds_delta_k(12, 2, &v) == DS_OK);
  CHECK(v == 3);
  char buf[64];
  CHECK(ds_tau_k(6, 2, buf, sizeof buf) == DS_OK);
  CHECK(std::string(buf) == "4");
  CHECK(ds_tau_k(1ull << 39, 100, buf, sizeof buf) == DS_OK);
  CHECK(std::string(buf).size() > 19);  // promoted past u64
  double re = 0, im = 0;
  CHECK(ds_tau_complex(6, 0.0, &re, &im) == DS_OK);
  CHECK(re == doctest::Approx(4.0));
  uint64_t cnt = 0;
  CHECK(ds_smooth_count(100.0, 5.0, &cnt) == DS_OK);
  CHECK(cnt == 34);
  CHECK(ds_sifted_count(100.0, 50.0, 7.0, &cnt) == DS_OK);
  CHECK(cnt == 10);
  CHECK(ds_sifted_count(3e9, 2e9, 2.0, &cnt) == DS_ERR_RESOURCE);
  double s = 0;
  CHECK(ds_short_sum("tau2", 10.0, 5.0, &s) == DS_OK);
  CHECK(s == 17.0);
  CHECK(ds_short_sum("nope", 10.0, 5.0, &s) == DS_ERR_USAGE);
  double S = 0, Sh = 0;
  CHECK(ds_weighted_delta_sums(10.0, 0.0, &S, &Sh) == DS_OK);
  CHECK(S == 1.0);
  CHECK(ds_factorize(0, nullptr, nullptr, 0, nullptr) == DS_ERR_DOMAIN);
  uint64_t ps[16];
  uint32_t es[16];
  int n = 0;
  CHECK(ds_factorize(12, ps, es, 16, &n) == DS_OK);
  CHECK(n == 2);
  CHECK(ps[0] == 2);
  CHECK(es[0] == 2);
  CHECK(ds_factorize(1000003ull * 1000033ull, ps, es, 16, &n) ==
        DS_ERR_FACTOR);
}

TEST_CASE("extreal and constants surface") {
  ds_extreal a = ds_ext_from_ln(100.0);
  ds_extreal s = ds_ext_add(a, a);
  CHECK(s.lnmag == doctest::Approx(100.0 + std::log(2.0)));
  ds_extreal p = ds_ext_pow(ds_ext_from_double(10.0), 65536.0);
  CHECK(ds_ext_log10(p) == 65536.0);
  CHECK(ds_ext_cmp(a, s) == -1);

  ds_constant_bundle b;
  REQUIRE(ds_constants(2, 1.0, &b) == DS_OK);
  CHECK(b.A == 2'132'812.5);
  CHECK(b.delta_flag == 1);
  CHECK(ds_constants(1, 1.0, &b) == DS_ERR_DOMAIN);

  char *json = nullptr;
  REQUIRE(ds_constants_json(2, 1.0, &json) == DS_OK);
  std::string j(json);
  ds_string_free(json);
  CHECK(j.find("\"log10_C\": 65536.0") != std::string::npos);
  CHECK(j.find("\"delta_flag\": true") != std::string::npos);

  ds_extreal thr;
  CHECK(ds_x_threshold(1.0, &thr) == DS_OK);
  CHECK(thr.lnmag == doctest::Approx(665.0757).epsilon(1e-4));

  ds_extreal rhs;
  CHECK(ds_corollary_rhs(1.0, std::exp(std::exp(1.0)), 1.0, 1, &rhs) ==
        DS_ERR_DOMAIN);
  double mk = 0;
  CHECK(ds_landreau_bound(2, 100.0, 10.0, &rhs, &mk) == DS_OK);
  CHECK(mk == 15.0);
}

TEST_CASE("special functions surface") {
  double out = 0;
  CHECK(ds_lambert_w0(std::exp(1.0), &out) == DS_OK);
  CHECK(out == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ds_lambert_wm1(-0.1, &out) == DS_OK);
  CHECK(out * std::exp(out) == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(ds_li(0.5, &out) == DS_ERR_DOMAIN);
  CHECK(ds_li(2.0, &out) == DS_OK);
  CHECK(out == doctest::Approx(1.04516378).epsilon(1e-8));
  CHECK(ds_frak_m() == doctest::Approx(0.4210264).epsilon(1e-5));
}

TEST_CASE("verify runs and is byte-stable") {
  const char *cfg = "sieve_limit=100000\nseed=7\n";
  char *r1 = nullptr, *r2 = nullptr;
  CHECK(ds_verify_run("L2.4,L2.8", cfg, &r1) == DS_OK);
  CHECK(ds_verify_run("L2.4,L2.8", cfg, &r2) == DS_OK);
  CHECK(std::string(r1) == std::string(r2));
  std::string body(r1);
  CHECK(body.find("\"check_id\": \"L2.4\"") != std::string::npos);
  ds_string_free(r1);
  ds_string_free(r2);
  char *bad = nullptr;
  CHECK(ds_verify_run("BOGUS", cfg, &bad) == DS_ERR_USAGE);
  CHECK(ds_verify_run("L2.4", "nonsense=1\n", &bad) == DS_ERR_USAGE);

  char *csv = nullptr;
  CHECK(ds_verify_run("L2.4", "sieve_limit=100000\nformat=csv\n", &csv) ==
        DS_OK);
  CHECK(std::string(csv).find("check_id,kind") == 0);
  ds_string_free(csv);

  char *ids = nullptr;
  CHECK(ds_check_ids(&ids) == DS_OK);
  CHECK(std::string(ids).find("L3.7") != std::string::npos);
  ds_string_free(ids);
}

TEST_CASE("json helpers") {
  char *s = nullptr;
  REQUIRE(ds_delta_json(12, &s) == DS_OK);
  std::string d(s);
  ds_string_free(s);
  CHECK(d.find("\"value\": 3") != std::string::npos);
  CHECK(d.find("\"witness\": 4") != std::string::npos);

  REQUIRE(ds_shortsum_json("tau2", 10.0, 5.0, &s) == DS_OK);
  std::string sum(s);
  ds_string_free(s);
  CHECK(sum.find("\"sum\": 17.0") != std::string::npos);

  double ts[2] = {0.0, 1.0};
  REQUIRE(ds_hooley_json(10.0, ts, 2, &s) == DS_OK);
  std::string h(s);
  ds_string_free(s);
  CHECK(h.find("\"results\"") != std::string::npos);

  REQUIRE(ds_classify_window(10'100.0, 100.0, "tau2", &s) == DS_OK);
  std::string cw(s);
  ds_string_free(s);
  CHECK(cw.find("\"classes\"") != std::string::npos);
}
