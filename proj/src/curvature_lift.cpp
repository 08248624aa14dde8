#include "curvrad/curvature_lift.hpp"

#include <cmath>

#include "curvrad/connection.hpp"
#include "curvrad/errors.hpp"

namespace curvrad {
namespace {

struct NormalData {
  Vec velocity;
  Vec normal;  // π_{γ̇⊥}(D_tγ̇)
  double speed;
  double normal_norm;
};

NormalData normal_part(const MetricModel& model, const SampledCurve& curve, int k,
                       const LiftOptions& opts) {
  if (k < 0 || k >= curve.size()) fail(ErrorKind::InvalidArgument, "sample index out of range");
  const Vec x = curve.point(k);
  if (!model.in_domain(x))
    fail(ErrorKind::Domain, "curve sample outside the chart of " + model.name(),
         static_cast<std::size_t>(k));
  const Mat g = model.metric(x);
  const Vec v = curve.velocity(k);
  const double speed2 = v.dot(g * v);
  const double speed = std::sqrt(speed2);
  if (!(speed > opts.speed_tol))
    fail(ErrorKind::DegenerateSpeed, "curve speed below tolerance", static_cast<std::size_t>(k));
  const Vec acc = curve.acceleration(k) + gamma_contract(model, x, v, v);
  const Vec normal = acc - (v.dot(g * acc) / speed2) * v;
  return {v, normal, speed, std::sqrt(normal.dot(g * normal))};
}

}  // namespace

double geodesic_curvature(const MetricModel& model, const SampledCurve& curve, int k,
                          const LiftOptions& opts) {
  const auto d = normal_part(model, curve, k, opts);
  return d.normal_norm / (d.speed * d.speed);
}

Vec curvature_radius(const MetricModel& model, const SampledCurve& curve, int k,
                     const LiftOptions& opts) {
  const auto d = normal_part(model, curve, k, opts);
  const double kappa = d.normal_norm / (d.speed * d.speed);
  if (!(kappa > opts.kappa_min))
    fail(ErrorKind::KappaVanishes, "geodesic curvature vanishes, radius undefined",
         static_cast<std::size_t>(k));
  return d.normal / (kappa * d.normal_norm);
}

LiftedCurve lift(const MetricModel& model, const SampledCurve& curve, int sign,
                 const LiftOptions& opts) {
  if (sign != 1 && sign != -1) fail(ErrorKind::InvalidArgument, "lift sign must be +1 or -1");
  if (curve.dim() != model.dim())
    fail(ErrorKind::InvalidArgument, "curve dimension does not match model " + model.name());
  LiftedCurve out;
  out.sign = sign;
  out.times = curve.times();
  out.states.reserve(static_cast<std::size_t>(curve.size()));
  out.kappa.reserve(static_cast<std::size_t>(curve.size()));
  for (int k = 0; k < curve.size(); ++k) {
    const auto d = normal_part(model, curve, k, opts);
    const double kappa = d.normal_norm / (d.speed * d.speed);
    if (!(kappa > opts.kappa_min))
      fail(ErrorKind::KappaVanishes, "geodesic curvature vanishes, radius undefined",
           static_cast<std::size_t>(k));
    const Vec R = d.normal / (kappa * d.normal_norm);
    const Vec V = (sign / (kappa * d.speed)) * d.velocity;
    RadiusPoint q{curve.point(k), V, R};
    if (!is_valid(model, q, opts.constraint_tol))
      fail(ErrorKind::NotAdmissible, "lifted state violates the radius constraints",
           static_cast<std::size_t>(k));
    out.states.push_back(std::move(q));
    out.kappa.push_back(kappa);
  }
  return out;
}

double homothety_invariance_check(const MetricModel& model, const SampledCurve& curve,
                                  double lambda, const LiftOptions& opts) {
  const LiftedCurve a = lift(model, curve, 1, opts);
  const LiftedCurve b = lift(model.scaled(lambda), curve, 1, opts);
  double worst = 0.0;
  for (int k = 0; k < a.size(); ++k)
    worst = std::max(worst, (a.states[k].R - b.states[k].R).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace curvrad
