#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

// Data-parallel inner loops: finite-difference stencils over sampled series,
// trapezoidal quadrature, RK4 stage combination, and the batched SIM(2)
// Hamiltonian vector field. Each kernel has a scalar reference version and
// vector variants; the active table is picked once at runtime from the CPU
// features (override with CURVRAD_SIMD=scalar|avx2|neon).
//
// Vector variants evaluate the same arithmetic in the same order as the scalar
// reference, so elementwise kernels agree bit for bit. Reductions (trapezoid)
// differ only in summation order.

namespace curvrad::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

// Number of state components per SIM(2) lane: θ, ρ, x₁, x₂, p_θ, p_ρ, p_x₁, p_x₂.
inline constexpr std::size_t kSim2Components = 8;

struct KernelTable {
  Isa isa;

  // Fourth-order central first derivative on a uniform grid. Writes
  // out[k] for 2 <= k < n-2 only; inv_h = 1/h.
  void (*diff1_o4)(const double* y, std::size_t n, double inv_h, double* out);

  // Fourth-order central second derivative; same index range, inv_h2 = 1/h².
  void (*diff2_o4)(const double* y, std::size_t n, double inv_h2, double* out);

  // Σ ½ (t[k+1]-t[k]) (f[k]+f[k+1]) over k < n-1.
  double (*trapezoid)(const double* t, const double* f, std::size_t n);

  // out = y + a·x
  void (*axpy)(std::size_t n, double a, const double* x, const double* y, double* out);

  // out = y + h/6 · ((k1 + k4) + 2 (k2 + k3))
  void (*rk4_combine)(std::size_t n, double h, const double* y, const double* k1,
                      const double* k2, const double* k3, const double* k4, double* out);

  // Hamilton's equations of 2H = p_θ² + (p_ρ − e^ρcosθ p_x₁ − e^ρsinθ p_x₂)² for
  // `lanes` independent phase points in component-major layout
  // (component c of lane i at [c*lanes + i]). ec/es hold e^ρcosθ and e^ρsinθ.
  void (*sim2_rhs)(std::size_t lanes, const double* state, const double* ec, const double* es,
                   double* deriv);
};

const KernelTable& kernels();

// nullptr when the variant is not compiled in or the CPU cannot run it.
const KernelTable* kernels_for(Isa isa);

std::vector<Isa> available_isas();

namespace detail {
const KernelTable& scalar_table();
#if defined(CURVRAD_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(CURVRAD_HAVE_NEON)
const KernelTable& neon_table();
#endif
}  // namespace detail

}  // namespace curvrad::simd
