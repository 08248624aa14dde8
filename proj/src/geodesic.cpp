#include "curvrad/geodesic.hpp"

#include <cmath>

#include "curvrad/connection.hpp"
#include "curvrad/errors.hpp"
#include "curvrad/integrator.hpp"

namespace curvrad {

Mat geodesic_path(const MetricModel& model, const TangentPoint& p, double t, double step) {
  if (!(step > 0.0)) fail(ErrorKind::InvalidArgument, "integration step must be positive");
  const int n = model.dim();
  model.require_domain(p.x);
  if (p.v.size() != n) fail(ErrorKind::InvalidArgument, "tangent vector has wrong dimension");

  const int steps = t == 0.0 ? 0 : step_count(t, step);
  Mat path(steps + 1, n);
  path.row(0) = p.x.transpose();
  if (steps == 0) return path;
  const double h = t / steps;

  auto rhs = [&](const Vec& y) -> Vec {
    const Vec x = y.head(n);
    if (!model.in_domain(x)) fail(ErrorKind::LeftChart, "geodesic left the chart of " + model.name());
    const Vec v = y.tail(n);
    Vec dy(2 * n);
    dy.head(n) = v;
    dy.tail(n) = -gamma_contract(model, x, v, v);
    return dy;
  };

  Vec y(2 * n);
  y << p.x, p.v;
  for (int k = 1; k <= steps; ++k) {
    y = rk4_step(rhs, y, h);
    if (!model.in_domain(y.head(n)))
      fail(ErrorKind::LeftChart, "geodesic left the chart of " + model.name(),
           static_cast<std::size_t>(k));
    path.row(k) = y.head(n).transpose();
  }
  return path;
}

Vec exp_map(const MetricModel& model, const TangentPoint& p, double t, double step) {
  const Mat path = geodesic_path(model, p, t, step);
  return path.row(path.rows() - 1).transpose();
}

Vec log_map(const MetricModel& model, const Vec& x0, const Vec& x1, double step, const Vec* guess,
            double tol, int max_iter) {
  model.require_domain(x0);
  model.require_domain(x1);
  const int n = model.dim();
  Vec v = guess ? *guess : Vec(x1 - x0);
  auto endpoint = [&](const Vec& w) { return exp_map(model, {x0, w}, 1.0, step); };
  const double scale = std::max(1.0, (x1 - x0).norm());

  Vec r = endpoint(v) - x1;
  for (int it = 0; it < max_iter; ++it) {
    if (r.norm() <= tol * scale) return v;
    Mat J(n, n);
    const double h = 1e-6 * std::max(1.0, v.norm());
    for (int j = 0; j < n; ++j) {
      Vec vp = v, vm = v;
      vp[j] += h;
      vm[j] -= h;
      J.col(j) = (endpoint(vp) - endpoint(vm)) / (2.0 * h);
    }
    const Vec delta = J.colPivHouseholderQr().solve(-r);
    double lambda = 1.0;
    for (int halving = 0; halving < 30; ++halving) {
      const Vec trial = v + lambda * delta;
      try {
        const Vec rt = endpoint(trial) - x1;
        if (rt.norm() < r.norm() || halving == 29) {
          v = trial;
          r = rt;
          break;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::LeftChart) throw;
      }
      lambda *= 0.5;
    }
  }
  if (r.norm() <= tol * scale) return v;
  fail(ErrorKind::NoConvergence, "geodesic shooting did not reach the target point");
}

double geodesic_distance(const MetricModel& model, const Vec& x0, const Vec& x1, double step) {
  if ((x1 - x0).norm() == 0.0) return 0.0;
  const Vec v = log_map(model, x0, x1, step);
  return model.norm(x0, v);
}

}  // namespace curvrad
