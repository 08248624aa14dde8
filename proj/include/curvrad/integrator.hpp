#pragma once

#include <cmath>

#include "curvrad/simd/kernels.hpp"
#include "curvrad/types.hpp"

namespace curvrad {

// One classical RK4 step of y' = f(y). Stage combinations go through the
// active SIMD kernel table.
template <class Rhs>
Vec rk4_step(Rhs&& f, const Vec& y, double h) {
  const auto& K = simd::kernels();
  const std::size_t n = static_cast<std::size_t>(y.size());
  Vec stage(y.size());
  const Vec k1 = f(y);
  K.axpy(n, 0.5 * h, k1.data(), y.data(), stage.data());
  const Vec k2 = f(stage);
  K.axpy(n, 0.5 * h, k2.data(), y.data(), stage.data());
  const Vec k3 = f(stage);
  K.axpy(n, h, k3.data(), y.data(), stage.data());
  const Vec k4 = f(stage);
  Vec out(y.size());
  K.rk4_combine(n, h, y.data(), k1.data(), k2.data(), k3.data(), k4.data(), out.data());
  return out;
}

// Number of equal steps covering |t| with steps no longer than `step`.
inline int step_count(double t, double step) {
  const double ratio = std::abs(t) / step;
  const int n = static_cast<int>(std::ceil(ratio - 1e-9));
  return n < 1 ? 1 : n;
}

}  // namespace curvrad
