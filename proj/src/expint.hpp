#pragma once

namespace ds::sf {

// Exponential integrals. ei(z) for z > 0 (power series; all-positive terms).
// e1(z) for z > 0 (series below 1, continued fraction above).
double ei(double z);
double e1(double z);

// Principal-value logarithmic integral li(x) = ei(log x), x > 1.
double li(double x);

}  // namespace ds::sf
