#include "curvrad/simd/kernels.hpp"
#include "kernels_common.hpp"

namespace curvrad::simd {
namespace {

void diff1_o4(const double* y, std::size_t n, double inv_h, double* out) {
  if (n < 5) return;
  detail::diff1_o4_tail(y, 2, n - 2, inv_h / 12.0, out);
}

void diff2_o4(const double* y, std::size_t n, double inv_h2, double* out) {
  if (n < 5) return;
  detail::diff2_o4_tail(y, 2, n - 2, inv_h2 / 12.0, out);
}

double trapezoid(const double* t, const double* f, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) acc += detail::trapezoid_term(t, f, k);
  return acc;
}

void axpy(std::size_t n, double a, const double* x, const double* y, double* out) {
  detail::axpy_tail(0, n, a, x, y, out);
}

void rk4_combine(std::size_t n, double h, const double* y, const double* k1, const double* k2,
                 const double* k3, const double* k4, double* out) {
  detail::rk4_tail(0, n, h / 6.0, y, k1, k2, k3, k4, out);
}

void sim2_rhs(std::size_t lanes, const double* state, const double* ec, const double* es,
              double* deriv) {
  detail::sim2_rhs_tail(0, lanes, lanes, state, ec, es, deriv);
}

}  // namespace

const KernelTable& detail::scalar_table() {
  static const KernelTable table{Isa::Scalar, diff1_o4, diff2_o4, trapezoid,
                                 axpy,        rk4_combine, sim2_rhs};
  return table;
}

}  // namespace curvrad::simd
