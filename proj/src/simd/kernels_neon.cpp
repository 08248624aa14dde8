// AArch64 variant: two double lanes per register. Advanced SIMD is part of the
// base AArch64 ISA, so no runtime feature probe is needed.
#include <arm_neon.h>

#include "curvrad/simd/kernels.hpp"
#include "kernels_common.hpp"

namespace curvrad::simd {
namespace {

constexpr std::size_t kW = 2;

void diff1_o4(const double* y, std::size_t n, double inv_h, double* out) {
  if (n < 5) return;
  const double scale = inv_h / 12.0;
  const float64x2_t vscale = vdupq_n_f64(scale);
  const float64x2_t eight = vdupq_n_f64(8.0);
  std::size_t k = 2;
  for (; k + kW <= n - 2; k += kW) {
    const float64x2_t outer = vsubq_f64(vld1q_f64(y + k - 2), vld1q_f64(y + k + 2));
    const float64x2_t inner = vsubq_f64(vld1q_f64(y + k + 1), vld1q_f64(y + k - 1));
    const float64x2_t sum = vaddq_f64(outer, vmulq_f64(eight, inner));
    vst1q_f64(out + k, vmulq_f64(sum, vscale));
  }
  detail::diff1_o4_tail(y, k, n - 2, scale, out);
}

void diff2_o4(const double* y, std::size_t n, double inv_h2, double* out) {
  if (n < 5) return;
  const double scale = inv_h2 / 12.0;
  const float64x2_t vscale = vdupq_n_f64(scale);
  const float64x2_t sixteen = vdupq_n_f64(16.0);
  const float64x2_t thirty = vdupq_n_f64(30.0);
  std::size_t k = 2;
  for (; k + kW <= n - 2; k += kW) {
    const float64x2_t outer = vaddq_f64(vld1q_f64(y + k + 2), vld1q_f64(y + k - 2));
    const float64x2_t inner = vaddq_f64(vld1q_f64(y + k + 1), vld1q_f64(y + k - 1));
    const float64x2_t a = vsubq_f64(vmulq_f64(sixteen, inner), outer);
    const float64x2_t b = vsubq_f64(a, vmulq_f64(thirty, vld1q_f64(y + k)));
    vst1q_f64(out + k, vmulq_f64(b, vscale));
  }
  detail::diff2_o4_tail(y, k, n - 2, scale, out);
}

double trapezoid(const double* t, const double* f, std::size_t n) {
  if (n < 2) return 0.0;
  const std::size_t m = n - 1;
  const float64x2_t half = vdupq_n_f64(0.5);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + kW <= m; k += kW) {
    const float64x2_t dt = vsubq_f64(vld1q_f64(t + k + 1), vld1q_f64(t + k));
    const float64x2_t fs = vaddq_f64(vld1q_f64(f + k), vld1q_f64(f + k + 1));
    acc = vaddq_f64(acc, vmulq_f64(vmulq_f64(half, dt), fs));
  }
  double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; k < m; ++k) total += detail::trapezoid_term(t, f, k);
  return total;
}

void axpy(std::size_t n, double a, const double* x, const double* y, double* out) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + kW <= n; i += kW)
    vst1q_f64(out + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  detail::axpy_tail(i, n, a, x, y, out);
}

void rk4_combine(std::size_t n, double h, const double* y, const double* k1, const double* k2,
                 const double* k3, const double* k4, double* out) {
  const double h6 = h / 6.0;
  const float64x2_t vh6 = vdupq_n_f64(h6);
  const float64x2_t two = vdupq_n_f64(2.0);
  std::size_t i = 0;
  for (; i + kW <= n; i += kW) {
    const float64x2_t ends = vaddq_f64(vld1q_f64(k1 + i), vld1q_f64(k4 + i));
    const float64x2_t mids = vaddq_f64(vld1q_f64(k2 + i), vld1q_f64(k3 + i));
    const float64x2_t slope = vaddq_f64(ends, vmulq_f64(two, mids));
    vst1q_f64(out + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(vh6, slope)));
  }
  detail::rk4_tail(i, n, h6, y, k1, k2, k3, k4, out);
}

void sim2_rhs(std::size_t lanes, const double* s, const double* ec, const double* es, double* d) {
  const double* p_theta = s + 4 * lanes;
  const double* p_rho = s + 5 * lanes;
  const double* p_x1 = s + 6 * lanes;
  const double* p_x2 = s + 7 * lanes;
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + kW <= lanes; i += kW) {
    const float64x2_t c = vld1q_f64(ec + i);
    const float64x2_t sn = vld1q_f64(es + i);
    const float64x2_t px1 = vld1q_f64(p_x1 + i);
    const float64x2_t px2 = vld1q_f64(p_x2 + i);
    const float64x2_t w =
        vsubq_f64(vsubq_f64(vld1q_f64(p_rho + i), vmulq_f64(c, px1)), vmulq_f64(sn, px2));
    vst1q_f64(d + i, vld1q_f64(p_theta + i));
    vst1q_f64(d + lanes + i, w);
    vst1q_f64(d + 2 * lanes + i, vnegq_f64(vmulq_f64(w, c)));
    vst1q_f64(d + 3 * lanes + i, vnegq_f64(vmulq_f64(w, sn)));
    const float64x2_t cross = vsubq_f64(vmulq_f64(sn, px1), vmulq_f64(c, px2));
    vst1q_f64(d + 4 * lanes + i, vnegq_f64(vmulq_f64(w, cross)));
    const float64x2_t along = vaddq_f64(vmulq_f64(c, px1), vmulq_f64(sn, px2));
    vst1q_f64(d + 5 * lanes + i, vmulq_f64(w, along));
    vst1q_f64(d + 6 * lanes + i, zero);
    vst1q_f64(d + 7 * lanes + i, zero);
  }
  detail::sim2_rhs_tail(i, lanes, lanes, s, ec, es, d);
}

}  // namespace

const KernelTable& detail::neon_table() {
  static const KernelTable table{Isa::Neon, diff1_o4, diff2_o4, trapezoid,
                                 axpy,      rk4_combine, sim2_rhs};
  return table;
}

}  // namespace curvrad::simd
