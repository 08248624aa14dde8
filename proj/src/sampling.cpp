#include "curvrad/sampling.hpp"

#include <cmath>
#include <numbers>

#include "curvrad/errors.hpp"

namespace curvrad {

Vec random_chart_point(const MetricModel& model, Rng& rng) {
  const int n = model.dim();
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Vec x(n);
  if (model.name().rfind("sphere2", 0) == 0) {
    std::uniform_real_distribution<double> colat(0.5, std::numbers::pi - 0.5);
    std::uniform_real_distribution<double> lon(-std::numbers::pi, std::numbers::pi);
    x << colat(rng), lon(rng);
    return x;
  }
  if (model.name().rfind("hyperbolic2", 0) == 0) {
    std::uniform_real_distribution<double> height(0.5, 2.0);
    x << unit(rng), height(rng);
    return x;
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (int i = 0; i < n; ++i) x[i] = unit(rng);
    if (model.in_domain(x)) return x;
  }
  fail(ErrorKind::Domain, "could not sample a point inside the chart of " + model.name());
}

RadiusPoint random_radius_point_at(const MetricModel& model, const Vec& x, double radius,
                                   Rng& rng) {
  const int n = model.dim();
  const Mat g = model.metric(x);
  std::normal_distribution<double> normal;
  auto ip = [&](const Vec& a, const Vec& b) { return a.dot(g * b); };
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vec a(n), b(n);
    for (int i = 0; i < n; ++i) a[i] = normal(rng);
    for (int i = 0; i < n; ++i) b[i] = normal(rng);
    const double la = std::sqrt(ip(a, a));
    if (!(la > 1e-3)) continue;
    a /= la;
    b -= ip(a, b) * a;
    const double lb = std::sqrt(ip(b, b));
    if (!(lb > 1e-3)) continue;
    b /= lb;
    return RadiusPoint{x, radius * b, radius * a};
  }
  fail(ErrorKind::DegenerateFrame, "could not sample orthogonal directions");
}

RadiusPoint random_radius_point(const MetricModel& model, Rng& rng, double radius_min,
                                double radius_max) {
  const Vec x = random_chart_point(model, rng);
  std::uniform_real_distribution<double> rad(radius_min, radius_max);
  const double r = rad(rng);
  return random_radius_point_at(model, x, r, rng);
}

}  // namespace curvrad
