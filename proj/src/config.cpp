#include "config.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "errors.hpp"

namespace ds::verify {

// defined in checks.cpp; used to validate tolerance-override ids
bool is_registered_check(const std::string &id);

namespace {

u64 parse_u64(const std::string &v, const std::string &key) {
  char *end = nullptr;
  double d = std::strtod(v.c_str(), &end);  // accepts 1e6-style values
  if (end == v.c_str() || *end != '\0' || d < 0 || d > 1.8e19)
    throw usage_error("config: bad value for " + key + ": " + v);
  return static_cast<u64>(d);
}

}  // namespace

void RunConfig::apply_line(const std::string &raw) {
  std::string line = raw;
  if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
  size_t b = line.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return;
  size_t e = line.find_last_not_of(" \t\r\n");
  line = line.substr(b, e - b + 1);
  auto eq = line.find('=');
  if (eq == std::string::npos)
    throw usage_error("config: expected key=value, got: " + line);
  std::string key = line.substr(0, eq);
  std::string val = line.substr(eq + 1);
  if (key == "sieve_limit")
    sieve_limit = parse_u64(val, key);
  else if (key == "eval_budget")
    eval_budget = parse_u64(val, key);
  else if (key == "threads")
    threads = static_cast<int>(parse_u64(val, key));
  else if (key == "seed")
    seed = parse_u64(val, key);
  else if (key == "format") {
    if (val != "json" && val != "csv")
      throw usage_error("config: format must be json or csv");
    format = val;
  } else if (key == "out")
    out = val;
  else if (key == "sieve_cache")
    sieve_cache = val;
  else if (key == "smoothing_nmax")
    smoothing_nmax = parse_u64(val, key);
  else if (key == "proposition_xmax")
    proposition_xmax = parse_u64(val, key);
  else if (key == "mean_xmax")
    mean_xmax = parse_u64(val, key);
  else if (key == "pi_li_grid_max")
    pi_li_grid_max = parse_u64(val, key);
  else if (key == "s1_cutoff")
    s1_cutoff = parse_u64(val, key);
  else if (key == "s2_cutoff")
    s2_cutoff = parse_u64(val, key);
  else if (key == "class_windows")
    class_windows = static_cast<int>(parse_u64(val, key));
  else if (key.rfind("grid.", 0) == 0) {
    std::string axis = key.substr(5);
    auto dots = val.find("..");
    if (axis.empty() || dots == std::string::npos)
      throw usage_error("config: grid override needs name=lo..hi[:n]: " + val);
    double lo = std::strtod(val.substr(0, dots).c_str(), nullptr);
    std::string rest = val.substr(dots + 2);
    int n = 0;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      n = std::atoi(rest.substr(colon + 1).c_str());
      rest = rest.substr(0, colon);
    }
    double hi = std::strtod(rest.c_str(), nullptr);
    if (!(hi >= lo)) throw usage_error("config: grid needs lo <= hi: " + val);
    std::vector<double> pts;
    if (n > 0) {
      pts = lin_spaced(lo, hi, n);
    } else if (lo == std::floor(lo) && hi == std::floor(hi) &&
               hi - lo <= 64.0) {
      for (double v = lo; v <= hi; v += 1.0) pts.push_back(v);
    } else {
      pts = lin_spaced(lo, hi, 21);
    }
    grid_override[axis] = pts;
  } else if (key.rfind("tol.", 0) == 0) {
    std::string id = key.substr(4);
    if (!is_registered_check(id))
      throw usage_error("config: tolerance override for unknown check: " + id);
    char *end = nullptr;
    double d = std::strtod(val.c_str(), &end);
    if (end == val.c_str() || *end != '\0' || !(d > 0))
      throw usage_error("config: bad tolerance for " + id + ": " + val);
    tol_override[id] = d;
  } else
    throw usage_error("config: unknown key: " + key);
}

RunConfig RunConfig::parse(const std::string &text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) cfg.apply_line(line);
  return cfg;
}

}  // namespace ds::verify
