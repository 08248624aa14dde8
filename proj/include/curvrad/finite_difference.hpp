#pragma once

#include <span>

#include "curvrad/types.hpp"

namespace curvrad {

// Fornberg's recursion: weights w(m, j) such that
//   f^(m)(x0) ≈ Σ_j w(m, j) f(nodes[j])   for m = 0..max_order.
Mat fornberg_weights(double x0, std::span<const double> nodes, int max_order);

struct SeriesDerivatives {
  Mat first;   // K × n
  Mat second;  // K × n
};

// Derivatives of the sampled series values(k, :) at times[k].
//
// order 4: five-point central stencils at interior nodes (vectorized on a
// uniform grid), five-node Fornberg stencils at k = 1 and K-2, and one-sided
// second-order stencils at the two endpoints. Needs K >= 5.
// order 2: three-point stencils at interior nodes and one-sided second-order
// stencils at the endpoints. Needs K >= 3.
SeriesDerivatives differentiate(std::span<const double> times, const Mat& values, int order = 4);

// True when consecutive spacings agree to a relative 1e-9.
bool is_uniform_grid(std::span<const double> times);

}  // namespace curvrad
