// Compiled with -mavx2 only; selected at runtime when the CPU reports AVX2.
#include <immintrin.h>

#include "curvrad/simd/kernels.hpp"
#include "kernels_common.hpp"

namespace curvrad::simd {
namespace {

constexpr std::size_t kW = 4;

void diff1_o4(const double* y, std::size_t n, double inv_h, double* out) {
  if (n < 5) return;
  const double scale = inv_h / 12.0;
  const __m256d vscale = _mm256_set1_pd(scale);
  const __m256d eight = _mm256_set1_pd(8.0);
  std::size_t k = 2;
  for (; k + kW <= n - 2; k += kW) {
    const __m256d outer = _mm256_sub_pd(_mm256_loadu_pd(y + k - 2), _mm256_loadu_pd(y + k + 2));
    const __m256d inner = _mm256_sub_pd(_mm256_loadu_pd(y + k + 1), _mm256_loadu_pd(y + k - 1));
    const __m256d sum = _mm256_add_pd(outer, _mm256_mul_pd(eight, inner));
    _mm256_storeu_pd(out + k, _mm256_mul_pd(sum, vscale));
  }
  detail::diff1_o4_tail(y, k, n - 2, scale, out);
}

void diff2_o4(const double* y, std::size_t n, double inv_h2, double* out) {
  if (n < 5) return;
  const double scale = inv_h2 / 12.0;
  const __m256d vscale = _mm256_set1_pd(scale);
  const __m256d sixteen = _mm256_set1_pd(16.0);
  const __m256d thirty = _mm256_set1_pd(30.0);
  std::size_t k = 2;
  for (; k + kW <= n - 2; k += kW) {
    const __m256d outer = _mm256_add_pd(_mm256_loadu_pd(y + k + 2), _mm256_loadu_pd(y + k - 2));
    const __m256d inner = _mm256_add_pd(_mm256_loadu_pd(y + k + 1), _mm256_loadu_pd(y + k - 1));
    const __m256d a = _mm256_sub_pd(_mm256_mul_pd(sixteen, inner), outer);
    const __m256d b = _mm256_sub_pd(a, _mm256_mul_pd(thirty, _mm256_loadu_pd(y + k)));
    _mm256_storeu_pd(out + k, _mm256_mul_pd(b, vscale));
  }
  detail::diff2_o4_tail(y, k, n - 2, scale, out);
}

double trapezoid(const double* t, const double* f, std::size_t n) {
  if (n < 2) return 0.0;
  const std::size_t m = n - 1;
  const __m256d half = _mm256_set1_pd(0.5);
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + kW <= m; k += kW) {
    const __m256d dt = _mm256_sub_pd(_mm256_loadu_pd(t + k + 1), _mm256_loadu_pd(t + k));
    const __m256d fs = _mm256_add_pd(_mm256_loadu_pd(f + k), _mm256_loadu_pd(f + k + 1));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_mul_pd(half, dt), fs));
  }
  alignas(32) double lanes[kW];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < m; ++k) total += detail::trapezoid_term(t, f, k);
  return total;
}

void axpy(std::size_t n, double a, const double* x, const double* y, double* out) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + kW <= n; i += kW) {
    const __m256d r = _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(out + i, r);
  }
  detail::axpy_tail(i, n, a, x, y, out);
}

void rk4_combine(std::size_t n, double h, const double* y, const double* k1, const double* k2,
                 const double* k3, const double* k4, double* out) {
  const double h6 = h / 6.0;
  const __m256d vh6 = _mm256_set1_pd(h6);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + kW <= n; i += kW) {
    const __m256d ends = _mm256_add_pd(_mm256_loadu_pd(k1 + i), _mm256_loadu_pd(k4 + i));
    const __m256d mids = _mm256_add_pd(_mm256_loadu_pd(k2 + i), _mm256_loadu_pd(k3 + i));
    const __m256d slope = _mm256_add_pd(ends, _mm256_mul_pd(two, mids));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(vh6, slope)));
  }
  detail::rk4_tail(i, n, h6, y, k1, k2, k3, k4, out);
}

void sim2_rhs(std::size_t lanes, const double* s, const double* ec, const double* es, double* d) {
  const double* p_theta = s + 4 * lanes;
  const double* p_rho = s + 5 * lanes;
  const double* p_x1 = s + 6 * lanes;
  const double* p_x2 = s + 7 * lanes;
  const __m256d zero = _mm256_setzero_pd();
  // Negate by flipping the sign bit so that -(0) stays -0 as in the scalar path.
  const __m256d sign = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + kW <= lanes; i += kW) {
    const __m256d c = _mm256_loadu_pd(ec + i);
    const __m256d sn = _mm256_loadu_pd(es + i);
    const __m256d px1 = _mm256_loadu_pd(p_x1 + i);
    const __m256d px2 = _mm256_loadu_pd(p_x2 + i);
    const __m256d w = _mm256_sub_pd(_mm256_sub_pd(_mm256_loadu_pd(p_rho + i), _mm256_mul_pd(c, px1)),
                                    _mm256_mul_pd(sn, px2));
    _mm256_storeu_pd(d + i, _mm256_loadu_pd(p_theta + i));
    _mm256_storeu_pd(d + lanes + i, w);
    _mm256_storeu_pd(d + 2 * lanes + i, _mm256_xor_pd(sign, _mm256_mul_pd(w, c)));
    _mm256_storeu_pd(d + 3 * lanes + i, _mm256_xor_pd(sign, _mm256_mul_pd(w, sn)));
    const __m256d cross = _mm256_sub_pd(_mm256_mul_pd(sn, px1), _mm256_mul_pd(c, px2));
    _mm256_storeu_pd(d + 4 * lanes + i, _mm256_xor_pd(sign, _mm256_mul_pd(w, cross)));
    const __m256d along = _mm256_add_pd(_mm256_mul_pd(c, px1), _mm256_mul_pd(sn, px2));
    _mm256_storeu_pd(d + 5 * lanes + i, _mm256_mul_pd(w, along));
    _mm256_storeu_pd(d + 6 * lanes + i, zero);
    _mm256_storeu_pd(d + 7 * lanes + i, zero);
  }
  detail::sim2_rhs_tail(i, lanes, lanes, s, ec, es, d);
}

}  // namespace

const KernelTable& detail::avx2_table() {
  static const KernelTable table{Isa::Avx2, diff1_o4, diff2_o4, trapezoid,
                                 axpy,      rk4_combine, sim2_rhs};
  return table;
}

}  // namespace curvrad::simd
