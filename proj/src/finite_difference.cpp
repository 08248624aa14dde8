#include "curvrad/finite_difference.hpp"

#include <cmath>

#include "curvrad/errors.hpp"
#include "curvrad/simd/kernels.hpp"

namespace curvrad {

Mat fornberg_weights(double x0, std::span<const double> nodes, int max_order) {
  const int n = static_cast<int>(nodes.size());
  Mat c = Mat::Zero(max_order + 1, n);
  c(0, 0) = 1.0;
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, max_order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c(k, i) = c1 * (k * c(k - 1, i - 1) - c5 * c(k, i - 1)) / c2;
        c(0, i) = -c1 * c5 * c(0, i - 1) / c2;
      }
      for (int k = mn; k >= 1; --k) c(k, j) = (c4 * c(k, j) - k * c(k - 1, j)) / c3;
      c(0, j) = c4 * c(0, j) / c3;
    }
    c1 = c2;
  }
  return c;
}

bool is_uniform_grid(std::span<const double> times) {
  if (times.size() < 2) return true;
  const double h = times[1] - times[0];
  for (std::size_t k = 1; k + 1 < times.size(); ++k) {
    if (std::abs((times[k + 1] - times[k]) - h) > 1e-9 * std::abs(h)) return false;
  }
  return true;
}

namespace {

// Applies a Fornberg stencil on nodes [first, first+count) at node k.
void stencil_at(std::span<const double> times, const Mat& values, int k, int first, int count,
                SeriesDerivatives& out) {
  const Mat w = fornberg_weights(times[k], times.subspan(first, count), 2);
  out.first.row(k).setZero();
  out.second.row(k).setZero();
  for (int j = 0; j < count; ++j) {
    out.first.row(k) += w(1, j) * values.row(first + j);
    out.second.row(k) += w(2, j) * values.row(first + j);
  }
}

// Endpoint stencils: three nodes for the first derivative and four for the
// second give second order at the boundary.
void endpoint(std::span<const double> times, const Mat& values, int k, bool left,
              SeriesDerivatives& out) {
  const int K = static_cast<int>(times.size());
  const int first1 = left ? 0 : K - 3;
  const Mat w1 = fornberg_weights(times[k], times.subspan(first1, 3), 1);
  out.first.row(k).setZero();
  for (int j = 0; j < 3; ++j) out.first.row(k) += w1(1, j) * values.row(first1 + j);

  const int count2 = std::min(4, K);
  const int first2 = left ? 0 : K - count2;
  const Mat w2 = fornberg_weights(times[k], times.subspan(first2, count2), 2);
  out.second.row(k).setZero();
  for (int j = 0; j < count2; ++j) out.second.row(k) += w2(2, j) * values.row(first2 + j);
}

}  // namespace

SeriesDerivatives differentiate(std::span<const double> times, const Mat& values, int order) {
  if (order != 2 && order != 4)
    fail(ErrorKind::InvalidArgument, "derivative order must be 2 or 4");
  const int K = static_cast<int>(times.size());
  if (values.rows() != K) fail(ErrorKind::InvalidArgument, "times and values differ in length");
  const int width = order + 1;
  if (K < width)
    fail(ErrorKind::InsufficientSamples, "need at least " + std::to_string(width) +
                                             " samples for order-" + std::to_string(order) +
                                             " stencils, got " + std::to_string(K));
  for (int k = 0; k + 1 < K; ++k) {
    if (!(times[k + 1] > times[k]))
      fail(ErrorKind::InvalidArgument, "times must be strictly increasing", k + 1);
  }

  const int n = static_cast<int>(values.cols());
  SeriesDerivatives out{Mat::Zero(K, n), Mat::Zero(K, n)};
  endpoint(times, values, 0, true, out);
  endpoint(times, values, K - 1, false, out);

  if (order == 2) {
    for (int k = 1; k < K - 1; ++k) stencil_at(times, values, k, k - 1, 3, out);
    return out;
  }

  stencil_at(times, values, 1, 0, 5, out);
  stencil_at(times, values, K - 2, K - 5, 5, out);
  if (K <= 5) {
    if (K == 5) stencil_at(times, values, 2, 0, 5, out);
    return out;
  }

  if (is_uniform_grid(times)) {
    const double h = (times[K - 1] - times[0]) / (K - 1);
    const auto& kern = simd::kernels();
    // Eigen is column-major: each component series is contiguous.
    const Mat y = values;
    Vec d1(K), d2(K);
    for (int c = 0; c < n; ++c) {
      const double* col = y.col(c).data();
      kern.diff1_o4(col, static_cast<std::size_t>(K), 1.0 / h, d1.data());
      kern.diff2_o4(col, static_cast<std::size_t>(K), 1.0 / (h * h), d2.data());
      out.first.col(c).segment(2, K - 4) = d1.segment(2, K - 4);
      out.second.col(c).segment(2, K - 4) = d2.segment(2, K - 4);
    }
  } else {
    for (int k = 2; k < K - 2; ++k) stencil_at(times, values, k, k - 2, 5, out);
  }
  return out;
}

}  // namespace curvrad
