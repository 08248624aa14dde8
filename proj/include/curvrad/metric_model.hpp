#pragma once

#include <functional>
#include <string>

#include "curvrad/types.hpp"

namespace curvrad {

using MetricFn = std::function<Mat(const Vec&)>;
using ChristoffelFn = std::function<ChristoffelSymbols(const Vec&)>;
using DomainFn = std::function<bool(const Vec&)>;

// A Riemannian metric on a single chart. Immutable once built; copies share
// the underlying callables.
class MetricModel {
 public:
  MetricModel(std::string name, int dim, MetricFn metric, ChristoffelFn christoffel = {},
              DomainFn domain = {}, double fd_step = 1e-5);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  double fd_step() const { return fd_step_; }
  bool has_analytic_christoffel() const { return static_cast<bool>(christoffel_); }
  const ChristoffelFn& christoffel_fn() const { return christoffel_; }

  bool in_domain(const Vec& x) const;
  // Throws Error(Domain) when x is outside the chart.
  void require_domain(const Vec& x) const;

  // g_{μν}(x); checks the domain first.
  Mat metric(const Vec& x) const;
  double inner(const Vec& x, const Vec& X, const Vec& Y) const;
  double norm(const Vec& x, const Vec& X) const;

  // The metric λ·g. Analytic Christoffel symbols carry over unchanged since
  // the Levi-Civita connection is scale invariant.
  MetricModel scaled(double lambda) const;
  MetricModel with_fd_step(double fd_step) const;
  // Same metric with Christoffel symbols forced through finite differences.
  MetricModel without_analytic_christoffel() const;

 private:
  std::string name_;
  int dim_;
  MetricFn metric_;
  ChristoffelFn christoffel_;
  DomainFn domain_;
  double fd_step_;
};

MetricModel euclidean(int n);
// Unit sphere in (colatitude θ, longitude φ); θ is kept at least
// kSpherePoleMargin away from the poles.
MetricModel sphere2();
// Upper half-plane y > 0 with (dx² + dy²)/y².
MetricModel hyperbolic2();

inline constexpr double kSpherePoleMargin = 1e-3;

}  // namespace curvrad
