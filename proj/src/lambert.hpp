#pragma once

namespace ds::sf {

// Real branches of the Lambert W function, w e^w = x.
// w0: x >= -1/e. wm1: -1/e <= x < 0, value <= -1.
// Both satisfy the defining identity to 1e-12 relative.
double lambert_w0(double x);
double lambert_wm1(double x);

}  // namespace ds::sf
