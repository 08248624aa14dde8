#include "curvrad/metric_model.hpp"

#include <cmath>
#include <numbers>

#include "curvrad/errors.hpp"

namespace curvrad {

MetricModel::MetricModel(std::string name, int dim, MetricFn metric, ChristoffelFn christoffel,
                         DomainFn domain, double fd_step)
    : name_(std::move(name)),
      dim_(dim),
      metric_(std::move(metric)),
      christoffel_(std::move(christoffel)),
      domain_(std::move(domain)),
      fd_step_(fd_step) {
  if (dim_ < 1) fail(ErrorKind::InvalidArgument, "metric dimension must be positive");
  if (!metric_) fail(ErrorKind::InvalidArgument, "metric function is required");
  if (!(fd_step_ > 0.0)) fail(ErrorKind::InvalidArgument, "fd_step must be positive");
}

bool MetricModel::in_domain(const Vec& x) const {
  if (x.size() != dim_ || !x.allFinite()) return false;
  return !domain_ || domain_(x);
}

void MetricModel::require_domain(const Vec& x) const {
  if (x.size() != dim_)
    fail(ErrorKind::InvalidArgument, "point has dimension " + std::to_string(x.size()) +
                                         ", model " + name_ + " expects " + std::to_string(dim_));
  if (!in_domain(x)) fail(ErrorKind::Domain, "point outside the chart of " + name_);
}

Mat MetricModel::metric(const Vec& x) const {
  require_domain(x);
  return metric_(x);
}

double MetricModel::inner(const Vec& x, const Vec& X, const Vec& Y) const {
  return X.dot(metric(x) * Y);
}

double MetricModel::norm(const Vec& x, const Vec& X) const { return std::sqrt(inner(x, X, X)); }

MetricModel MetricModel::scaled(double lambda) const {
  if (!(lambda > 0.0)) fail(ErrorKind::InvalidArgument, "scale factor must be positive");
  MetricFn base = metric_;
  return MetricModel(name_ + "*" + std::to_string(lambda), dim_,
                     [base, lambda](const Vec& x) -> Mat { return lambda * base(x); }, christoffel_,
                     domain_, fd_step_);
}

MetricModel MetricModel::with_fd_step(double fd_step) const {
  return MetricModel(name_, dim_, metric_, christoffel_, domain_, fd_step);
}

MetricModel MetricModel::without_analytic_christoffel() const {
  return MetricModel(name_ + "[fd]", dim_, metric_, {}, domain_, fd_step_);
}

MetricModel euclidean(int n) {
  return MetricModel(
      "euclidean:" + std::to_string(n), n, [n](const Vec&) -> Mat { return Mat::Identity(n, n); },
      [n](const Vec&) { return ChristoffelSymbols(n); });
}

MetricModel sphere2() {
  auto metric = [](const Vec& x) -> Mat {
    const double s = std::sin(x[0]);
    Mat g = Mat::Zero(2, 2);
    g(0, 0) = 1.0;
    g(1, 1) = s * s;
    return g;
  };
  auto christoffel = [](const Vec& x) {
    ChristoffelSymbols G(2);
    const double s = std::sin(x[0]);
    const double c = std::cos(x[0]);
    G(0, 1, 1) = -s * c;
    G(1, 0, 1) = c / s;
    G(1, 1, 0) = c / s;
    return G;
  };
  auto domain = [](const Vec& x) {
    return x[0] > kSpherePoleMargin && x[0] < std::numbers::pi - kSpherePoleMargin;
  };
  return MetricModel("sphere2", 2, metric, christoffel, domain);
}

MetricModel hyperbolic2() {
  auto metric = [](const Vec& x) -> Mat {
    return Mat::Identity(2, 2) / (x[1] * x[1]);
  };
  auto christoffel = [](const Vec& x) {
    ChristoffelSymbols G(2);
    const double inv = 1.0 / x[1];
    G(0, 0, 1) = -inv;
    G(0, 1, 0) = -inv;
    G(1, 0, 0) = inv;
    G(1, 1, 1) = -inv;
    return G;
  };
  auto domain = [](const Vec& x) { return x[1] > 0.0; };
  return MetricModel("hyperbolic2", 2, metric, christoffel, domain);
}

}  // namespace curvrad
