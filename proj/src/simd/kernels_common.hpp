#pragma once

// Scalar loop bodies shared by the reference kernels and by the remainder
// loops of the vector variants. Operation order here is the contract the
// vector lanes reproduce.

#include <cstddef>

namespace curvrad::simd::detail {

inline void diff1_o4_tail(const double* y, std::size_t begin, std::size_t end, double scale,
                          double* out) {
  for (std::size_t k = begin; k < end; ++k) {
    const double outer = y[k - 2] - y[k + 2];
    const double inner = y[k + 1] - y[k - 1];
    out[k] = (outer + 8.0 * inner) * scale;
  }
}

inline void diff2_o4_tail(const double* y, std::size_t begin, std::size_t end, double scale,
                          double* out) {
  for (std::size_t k = begin; k < end; ++k) {
    const double outer = y[k + 2] + y[k - 2];
    const double inner = y[k + 1] + y[k - 1];
    out[k] = ((16.0 * inner - outer) - 30.0 * y[k]) * scale;
  }
}

inline double trapezoid_term(const double* t, const double* f, std::size_t k) {
  return 0.5 * (t[k + 1] - t[k]) * (f[k] + f[k + 1]);
}

inline void axpy_tail(std::size_t begin, std::size_t end, double a, const double* x,
                      const double* y, double* out) {
  for (std::size_t i = begin; i < end; ++i) out[i] = y[i] + a * x[i];
}

inline void rk4_tail(std::size_t begin, std::size_t end, double h6, const double* y,
                     const double* k1, const double* k2, const double* k3, const double* k4,
                     double* out) {
  for (std::size_t i = begin; i < end; ++i)
    out[i] = y[i] + h6 * ((k1[i] + k4[i]) + 2.0 * (k2[i] + k3[i]));
}

inline void sim2_rhs_tail(std::size_t begin, std::size_t end, std::size_t lanes,
                          const double* s, const double* ec, const double* es, double* d) {
  const double* p_theta = s + 4 * lanes;
  const double* p_rho = s + 5 * lanes;
  const double* p_x1 = s + 6 * lanes;
  const double* p_x2 = s + 7 * lanes;
  for (std::size_t i = begin; i < end; ++i) {
    const double c = ec[i];
    const double sn = es[i];
    const double w = (p_rho[i] - c * p_x1[i]) - sn * p_x2[i];
    d[i] = p_theta[i];
    d[lanes + i] = w;
    d[2 * lanes + i] = -(w * c);
    d[3 * lanes + i] = -(w * sn);
    d[4 * lanes + i] = -(w * (sn * p_x1[i] - c * p_x2[i]));
    d[5 * lanes + i] = w * (c * p_x1[i] + sn * p_x2[i]);
    d[6 * lanes + i] = 0.0;
    d[7 * lanes + i] = 0.0;
  }
}

}  // namespace curvrad::simd::detail
