#pragma once

#include <functional>
#include <span>
#include <vector>

namespace ds::sf {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long long evaluations = 0;
};

// Thrown when the evaluation budget is exhausted before the tolerance is
// met; carries the partial estimate.
struct quad_failure {
  QuadratureResult partial;
};

// Adaptive Simpson over [a,b] to absolute tolerance tol. Interior kink
// abscissae are split out before adapting, which restores O(h^4) on
// piecewise-smooth integrands like |cos(t/2)|.
QuadratureResult quad(const std::function<double(double)> &f, double a,
                      double b, double tol,
                      std::span<const double> kinks = {},
                      long long max_evals = 20'000'000);

// Kink list for |cos(t/2)|-type integrands: odd multiples of pi in [a,b].
std::vector<double> cos_half_kinks(double a, double b);

// Extremal constant of the |cos(t/2)| periodic mean:
// (2/pi)(sqrt(pi^2-4) - 2 arccos(2/pi)).
double frak_m();
// Same quantity obtained by golden-section maximization of
// |int_0^{2 c pi} (|cos(t/2)| - 2/pi) dt| over c in [0,1].
double frak_m_maximized(double *argmax_c = nullptr);
// Closed-form value of that integral for a given c (the piecewise formula).
double cos_mean_excursion(double c);

}  // namespace ds::sf
