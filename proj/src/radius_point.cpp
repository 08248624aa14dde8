#include "curvrad/radius_point.hpp"

#include <cmath>

#include "curvrad/errors.hpp"

namespace curvrad {

Vec pack(const RadiusPoint& q) {
  const int n = q.dim();
  Vec y(3 * n);
  y << q.x, q.R, q.V;
  return y;
}

RadiusPoint unpack(const Vec& y, int n) {
  return RadiusPoint{y.segment(0, n), y.segment(2 * n, n), y.segment(n, n)};
}

ConstraintResidual constraint_residual(const MetricModel& model, const RadiusPoint& q) {
  const Mat g = model.metric(q.x);
  const double rr = std::sqrt(q.R.dot(g * q.R));
  const double vv = std::sqrt(q.V.dot(g * q.V));
  return {std::abs(q.R.dot(g * q.V)), std::abs(rr - vv), rr};
}

bool is_valid(const MetricModel& model, const RadiusPoint& q, double tol) {
  if (q.V.size() != model.dim() || q.R.size() != model.dim() || !model.in_domain(q.x))
    return false;
  const auto c = constraint_residual(model, q);
  return c.radius > 0.0 && c.orthogonality <= tol * c.radius * c.radius &&
         c.norm_gap <= tol * c.radius;
}

void require_valid(const MetricModel& model, const RadiusPoint& q, double tol) {
  if (q.V.size() != model.dim() || q.R.size() != model.dim())
    fail(ErrorKind::InvalidArgument, "radius point vectors have the wrong dimension");
  model.require_domain(q.x);
  const auto c = constraint_residual(model, q);
  if (!(c.radius > 0.0)) fail(ErrorKind::InvalidArgument, "radius point has R = 0");
  if (c.orthogonality > tol * c.radius * c.radius)
    fail(ErrorKind::InvalidArgument,
         "radius point violates <R,V> = 0 (|<R,V>| = " + std::to_string(c.orthogonality) + ")");
  if (c.norm_gap > tol * c.radius)
    fail(ErrorKind::InvalidArgument,
         "radius point violates |R| = |V| (gap " + std::to_string(c.norm_gap) + ")");
}

RadiusPoint project_to_constraints(const MetricModel& model, const RadiusPoint& q,
                                   double* distance) {
  const Mat g = model.metric(q.x);
  const double rr = std::sqrt(q.R.dot(g * q.R));
  const double vv = std::sqrt(q.V.dot(g * q.V));
  if (!(rr > 0.0) || !(vv > 0.0))
    fail(ErrorKind::InvalidArgument, "cannot project a radius point with a zero vector");
  const Vec r = q.R / rr;
  const Vec v = q.V / vv;
  const double s = r.dot(g * v);
  if (!(std::abs(s) < 1.0)) fail(ErrorKind::InvalidArgument, "R and V are parallel");
  // (I + S)^{-1/2} for the 2×2 Gram matrix [[1,s],[s,1]].
  const double a = 1.0 / std::sqrt(1.0 + s);
  const double b = 1.0 / std::sqrt(1.0 - s);
  const double alpha = 0.5 * (a + b);
  const double beta = 0.5 * (a - b);
  const double m = 0.5 * (rr + vv);

  RadiusPoint out{q.x, m * (beta * r + alpha * v), m * (alpha * r + beta * v)};
  if (distance) {
    const Vec dR = out.R - q.R;
    const Vec dV = out.V - q.V;
    *distance = std::sqrt(dR.dot(g * dR) + dV.dot(g * dV));
  }
  return out;
}

}  // namespace curvrad
