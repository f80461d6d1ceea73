#include "deltasum.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <sstream>

#include "checks.hpp"
#include "config.hpp"
#include "constants.hpp"
#include "delta_fn.hpp"
#include "errors.hpp"
#include "expint.hpp"
#include "extreal.hpp"
#include "integrate.hpp"
#include "lambert.hpp"
#include "prime_sums.hpp"
#include "prime_table.hpp"
#include "report.hpp"
#include "windows.hpp"

using nlohmann::ordered_json;

struct ds_prime_table {
  ds::primes::PrimeTable t;
};

namespace {

thread_local std::string g_last_error;

ds_status fail(ds_status code, const char *what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
ds_status guarded(Fn &&fn) {
  try {
    fn();
    return DS_OK;
  } catch (const ds::usage_error &e) {
    return fail(DS_ERR_USAGE, e.what());
  } catch (const ds::domain_error &e) {
    return fail(DS_ERR_DOMAIN, e.what());
  } catch (const ds::range_error &e) {
    return fail(DS_ERR_RANGE, e.what());
  } catch (const ds::resource_error &e) {
    return fail(DS_ERR_RESOURCE, e.what());
  } catch (const ds::precision_error &e) {
    return fail(DS_ERR_PRECISION, e.what());
  } catch (const ds::factor_error &e) {
    return fail(DS_ERR_FACTOR, e.what());
  } catch (const ds::io_error &e) {
    return fail(DS_ERR_IO, e.what());
  } catch (const ds::sf::quad_failure &) {
    return fail(DS_ERR_PRECISION, "quadrature did not converge in budget");
  } catch (const std::exception &e) {
    return fail(DS_ERR_INTERNAL, e.what());
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ds_extreal to_c(ds::ext::ExtReal v) {
  return {v.sign, v.lnmag, v.flagged ? 1 : 0};
}

ds::ext::ExtReal from_c(ds_extreal v) {
  return {v.sign, v.lnmag, v.flagged != 0};
}

ordered_json extreal_json(ds::ext::ExtReal v) {
  ordered_json j;
  j["sign"] = v.sign;
  j["lnmag"] = v.lnmag;
  j["log10"] = v.log10();
  if (v.flagged) j["flagged"] = true;
  return j;
}

}  // namespace

extern "C" {

const char *ds_version(void) { return "deltasum 1.0.0"; }

const char *ds_last_error(void) { return g_last_error.c_str(); }

void ds_string_free(char *s) { std::free(s); }

/* ---- prime tables ---- */

ds_status ds_prime_table_build(uint64_t limit, const char *cache_path,
                               ds_prime_table **out) {
  return guarded([&] {
    auto t = ds::primes::PrimeTable::build(limit,
                                           cache_path ? cache_path : "");
    *out = new ds_prime_table{std::move(t)};
  });
}

void ds_prime_table_free(ds_prime_table *t) { delete t; }

uint64_t ds_prime_table_limit(const ds_prime_table *t) {
  return t->t.limit();
}

uint64_t ds_prime_table_count(const ds_prime_table *t) {
  return t->t.primes().size();
}

uint64_t ds_pi(const ds_prime_table *t, double x) {
  return x < 2.0 ? 0 : t->t.pi(x);
}

double ds_theta(const ds_prime_table *t, double x) {
  return x < 2.0 ? 0.0 : t->t.theta(x);
}

uint64_t ds_nth_prime(const ds_prime_table *t, uint64_t n) {
  return t->t.nth_prime(n);
}

ds_status ds_mertens_sum(const ds_prime_table *t, double x, double *out) {
  return guarded([&] { *out = ds::primes::mertens_sum(t->t, x); });
}

ds_status ds_prime_log_power_sum(const ds_prime_table *t, double x,
                                 double alpha, double *out) {
  return guarded(
      [&] { *out = ds::primes::prime_log_power_sum(t->t, x, alpha); });
}

ds_status ds_prime_power_sum(const ds_prime_table *t, double x, double alpha,
                             double *out) {
  return guarded([&] { *out = ds::primes::prime_power_sum(t->t, x, alpha); });
}

ds_status ds_tau_abs_prime_sum(const ds_prime_table *t, double x, double v,
                               double *out) {
  return guarded([&] { *out = ds::primes::tau_abs_prime_sum(t->t, x, v); });
}

ds_status ds_ramare_tail(const char *weight_id, double x, double *out) {
  return guarded([&] {
    auto w = ds::primes::tail_weight_by_id(weight_id ? weight_id : "");
    *out = ds::primes::ramare_tail(w, x);
  });
}

ds_status ds_prime_constant_sums(const ds_prime_table *t, uint64_t cutoff,
                                 double out[4], int *warn) {
  return guarded([&] {
    auto r = ds::primes::prime_constant_sums(t->t, cutoff);
    out[0] = r.s1;
    out[1] = r.s2;
    out[2] = r.s1_tail;
    out[3] = r.s2_tail;
    if (warn) *warn = r.warn_below_reference ? 1 : 0;
  });
}

/* ---- exact arithmetic ---- */

ds_status ds_factorize(uint64_t n, uint64_t *primes, uint32_t *exps, int cap,
                       int *count) {
  return guarded([&] {
    auto f = ds::arith::factorize(n);
    if (static_cast<int>(f.factors.size()) > cap)
      throw ds::usage_error("ds_factorize: output capacity too small");
    *count = static_cast<int>(f.factors.size());
    for (int i = 0; i < *count; ++i) {
      primes[i] = f.factors[i].first;
      exps[i] = f.factors[i].second;
    }
  });
}

ds_status ds_tau_k(uint64_t n, int k, char *buf, size_t buflen) {
  return guarded([&] {
    auto t = ds::arith::tau_k(ds::arith::factorize(n), k);
    std::string s = t.str();
    if (s.size() + 1 > buflen)
      throw ds::usage_error("ds_tau_k: buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

ds_status ds_jordan_weighted(uint64_t n, double a, double *out) {
  return guarded(
      [&] { *out = ds::arith::jordan_weighted(ds::arith::factorize(n), a); });
}

ds_status ds_delta(uint64_t n, uint64_t *value, uint64_t *witness) {
  return guarded([&] {
    auto d = ds::arith::delta(n);
    *value = d.value;
    if (witness) *witness = d.witness_divisor;
  });
}

ds_status ds_delta_k(uint64_t n, int k, uint64_t *value) {
  return guarded([&] { *value = ds::arith::delta_k(n, k); });
}

ds_status ds_tau_complex(uint64_t n, double v, double *re, double *im) {
  return guarded([&] {
    auto c = ds::arith::tau_complex(ds::arith::factorize(n), v);
    *re = c.real();
    *im = c.imag();
  });
}

ds_status ds_smooth_count(double z, double t, uint64_t *out) {
  return guarded([&] { *out = ds::arith::smooth_count(z, t); });
}

ds_status ds_sifted_count(double x, double y, double z, uint64_t *out) {
  return guarded([&] { *out = ds::arith::sifted_count(x, y, z); });
}

ds_status ds_short_sum(const char *f_id, double x, double y, double *out) {
  return guarded([&] {
    auto f = ds::arith::FunctionId::parse(f_id ? f_id : "");
    *out = ds::arith::short_sum(f, x, y);
  });
}

ds_status ds_weighted_delta_sums(double x, double t, double *S, double *Sh) {
  return guarded([&] {
    auto r = ds::arith::weighted_delta_sums(x, t);
    *S = r.S;
    *Sh = r.Sh;
  });
}

/* ---- extended-range reals ---- */

ds_extreal ds_ext_from_double(double x) {
  return to_c(ds::ext::ExtReal::from_double(x));
}

ds_extreal ds_ext_from_ln(double lnmag) {
  return to_c(ds::ext::ExtReal::from_ln(lnmag));
}

ds_extreal ds_ext_add(ds_extreal a, ds_extreal b) {
  return to_c(ds::ext::add(from_c(a), from_c(b)));
}

ds_extreal ds_ext_mul(ds_extreal a, ds_extreal b) {
  return to_c(ds::ext::mul(from_c(a), from_c(b)));
}

ds_extreal ds_ext_pow(ds_extreal a, double e) {
  return to_c(ds::ext::pow(from_c(a), e));
}

int ds_ext_cmp(ds_extreal a, ds_extreal b) {
  return ds::ext::cmp(from_c(a), from_c(b));
}

double ds_ext_log10(ds_extreal a) { return from_c(a).log10(); }

/* ---- constants ---- */

ds_status ds_constants(int k, double ell, ds_constant_bundle *out) {
  return guarded([&] {
    auto b = ds::ext::constants(k, ell);
    *out = {b.k,        b.ell,      b.A,
            b.B,        to_c(b.C),  to_c(b.D),
            to_c(b.Lambda), to_c(b.ln_x_threshold), b.delta_flag ? 1 : 0};
  });
}

ds_status ds_constants_json(int k, double ell, char **json_out) {
  return guarded([&] {
    auto b = ds::ext::constants(k, ell);
    ordered_json j;
    j["k"] = b.k;
    j["l"] = b.ell;
    j["A"] = b.A;
    j["B"] = b.B;
    j["delta_flag"] = b.delta_flag;
    j["C"] = extreal_json(b.C);
    j["log10_C"] = b.C.log10();
    j["D"] = extreal_json(b.D);
    j["Lambda"] = extreal_json(b.Lambda);
    j["ln_Lambda"] = b.Lambda.lnmag;
    j["ln_x_threshold"] = extreal_json(b.ln_x_threshold);
    *json_out = dup_string(j.dump(2) + "\n");
  });
}

ds_status ds_x_threshold(double ell, ds_extreal *out) {
  return guarded([&] { *out = to_c(ds::ext::x_threshold(ell)); });
}

ds_status ds_main_rhs(const ds_constant_bundle *b, double x, double y,
                      double S, ds_extreal *out) {
  return guarded([&] {
    ds::ext::ConstantBundle cb;
    cb.k = b->k;
    cb.ell = b->ell;
    cb.A = b->A;
    cb.B = b->B;
    cb.C = from_c(b->C);
    cb.D = from_c(b->D);
    cb.Lambda = from_c(b->Lambda);
    cb.ln_x_threshold = from_c(b->ln_x_threshold);
    cb.delta_flag = b->delta_flag != 0;
    *out = to_c(ds::ext::main_rhs(cb, x, y, S));
  });
}

ds_status ds_corollary_rhs(double ell, double x, double y, int j,
                           ds_extreal *out) {
  return guarded([&] { *out = to_c(ds::ext::corollary_rhs(ell, x, y, j)); });
}

ds_status ds_landreau_bound(int k, double x, double y, ds_extreal *out,
                            double *Mk) {
  return guarded([&] {
    double m = 0;
    *out = to_c(ds::ext::landreau_bound(k, x, y, &m));
    if (Mk) *Mk = m;
  });
}

/* ---- special functions ---- */

ds_status ds_lambert_w0(double x, double *out) {
  return guarded([&] { *out = ds::sf::lambert_w0(x); });
}

ds_status ds_lambert_wm1(double x, double *out) {
  return guarded([&] { *out = ds::sf::lambert_wm1(x); });
}

ds_status ds_li(double x, double *out) {
  return guarded([&] { *out = ds::sf::li(x); });
}

double ds_frak_m(void) { return ds::sf::frak_m(); }

/* ---- verification ---- */

ds_status ds_verify_run(const char *ids_csv, const char *config_text,
                        char **report_out) {
  bool all_passed = false;
  ds_status st = guarded([&] {
    auto cfg = ds::verify::RunConfig::parse(config_text ? config_text : "");
    std::vector<std::string> ids;
    std::string sel = ids_csv ? ids_csv : "all";
    if (sel == "all" || sel.empty()) {
      for (auto &c : ds::verify::check_registry()) ids.push_back(c.id);
    } else {
      std::stringstream ss(sel);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) ids.push_back(tok);
      }
    }
    ds::verify::Context ctx(cfg);
    auto budget = ds::verify::Budget::from_config(cfg);
    auto reports = ds::verify::run_checks(ctx, ids, budget);
    all_passed = true;
    for (auto &r : reports) all_passed = all_passed && r.passed;
    std::map<std::string, std::string> meta{
        {"tool", ds_version()},
        {"sieve_limit", std::to_string(cfg.sieve_limit)},
        {"eval_budget", std::to_string(cfg.eval_budget)},
        {"seed", std::to_string(cfg.seed)},
    };
    std::string payload = cfg.format == "csv"
                              ? ds::verify::to_csv(reports)
                              : ds::verify::to_json(reports, meta);
    *report_out = dup_string(payload);
  });
  if (st != DS_OK) return st;
  return all_passed ? DS_OK : DS_ERR_CHECK_FAILED;
}

ds_status ds_check_ids(char **json_out) {
  return guarded([&] {
    ordered_json arr = ordered_json::array();
    for (auto &c : ds::verify::check_registry()) {
      ordered_json j;
      j["id"] = c.id;
      j["kind"] = c.kind;
      j["anchor"] = c.anchor;
      j["strict"] = c.strict;
      arr.push_back(j);
    }
    *json_out = dup_string(arr.dump(2) + "\n");
  });
}

ds_status ds_classify_window(double x, double y, const char *f_id,
                             char **json_out) {
  return guarded([&] {
    auto f = ds::arith::FunctionId::parse(f_id ? f_id : "delta");
    ds::verify::RunConfig cfg;
    ds::verify::Context ctx(cfg);
    auto wc = ds::verify::classify_window(ctx, x, y, f);
    ordered_json j;
    j["x"] = wc.x;
    j["y"] = wc.y;
    j["z"] = wc.z;
    j["f"] = f.str();
    const char *names[4] = {"I", "II", "III", "IV"};
    ordered_json cls = ordered_json::object();
    for (int i = 0; i < 4; ++i) {
      cls[names[i]] = {{"size", wc.class_sizes[i]},
                       {"sum", wc.class_sums[i]}};
    }
    j["classes"] = cls;
    j["total"] = wc.total;
    j["window_size"] = wc.members.size();
    *json_out = dup_string(j.dump(2) + "\n");
  });
}

ds_status ds_delta_json(uint64_t n, char **json_out) {
  return guarded([&] {
    auto d = ds::arith::delta(n);
    ordered_json j;
    j["n"] = d.n;
    j["value"] = d.value;
    j["witness"] = d.witness_divisor;
    j["window"] = {d.window_lo, d.window_hi};
    *json_out = dup_string(j.dump(2) + "\n");
  });
}

ds_status ds_shortsum_json(const char *f_id, double x, double y,
                           char **json_out) {
  return guarded([&] {
    auto f = ds::arith::FunctionId::parse(f_id ? f_id : "");
    double s = ds::arith::short_sum(f, x, y);
    ordered_json j;
    j["f"] = f.str();
    j["x"] = x;
    j["y"] = y;
    j["sum"] = s;
    *json_out = dup_string(j.dump(2) + "\n");
  });
}

ds_status ds_hooley_json(double x, const double *ts, int nts,
                         char **json_out) {
  return guarded([&] {
    ordered_json j;
    j["x"] = x;
    ordered_json rs = ordered_json::array();
    for (int i = 0; i < nts; ++i) {
      auto r = ds::arith::weighted_delta_sums(x, ts[i]);
      rs.push_back({{"t", ts[i]}, {"S", r.S}, {"Sh", r.Sh}});
    }
    j["results"] = rs;
    *json_out = dup_string(j.dump(2) + "\n");
  });
}

} /* extern "C" */
