#include "expint.hpp"

#include <cmath>

#include "errors.hpp"

namespace ds::sf {

namespace {
constexpr double kGamma = 0.57721566490153286060651209008240243;  // Euler-Mascheroni
}

double ei(double z) {
  if (z <= 0.0) throw domain_error("ei: requires z > 0");
  if (z >= 45.0) {
    // asymptotic e^z/z sum k!/z^k, truncated at the smallest term
    double sum = 1.0, term = 1.0;
    for (int k = 1; k < 60; ++k) {
      double next = term * k / z;
      if (next >= term) break;
      term = next;
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return std::exp(z) / z * sum;
  }
  // gamma + log z + sum z^n/(n n!); positive terms, no cancellation
  double sum = 0.0, term = 1.0;
  for (int n = 1; n < 200; ++n) {
    term *= z / n;
    double add = term / n;
    sum += add;
    if (add < 1e-18 * (sum + 1.0)) break;
  }
  return kGamma + std::log(z) + sum;
}

double e1(double z) {
  if (z <= 0.0) throw domain_error("e1: requires z > 0");
  if (z <= 1.0) {
    double sum = 0.0, term = 1.0;
    for (int n = 1; n < 60; ++n) {
      term *= -z / n;
      sum += term / n;
      if (std::fabs(term / n) < 1e-18) break;
    }
    return -kGamma - std::log(z) - sum;
  }
  // modified Lentz on the standard continued fraction
  double b = z + 1.0, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i <= 200; ++i) {
    double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-z) * h;
}

double li(double x) {
  if (x <= 1.0) throw domain_error("li: requires x > 1");
  return ei(std::log(x));
}

}  // namespace ds::sf
