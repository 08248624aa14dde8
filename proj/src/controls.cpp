#include "curvrad/controls.hpp"

#include <cmath>

#include "curvrad/errors.hpp"
#include "curvrad/finite_difference.hpp"
#include "curvrad/frame.hpp"
#include "curvrad/geodesic.hpp"
#include "curvrad/simd/kernels.hpp"

namespace curvrad {

ControlTrajectory controls_from_path(const MetricModel& model, const std::vector<double>& times,
                                     const std::vector<RadiusPoint>& states,
                                     const ControlOptions& opts, const Mat* state_velocities) {
  const int n = model.dim();
  const int K = static_cast<int>(states.size());
  if (static_cast<int>(times.size()) != K)
    fail(ErrorKind::InvalidArgument, "times and states differ in length");
  if (K == 0) fail(ErrorKind::InsufficientSamples, "empty trajectory");

  ControlTrajectory out;
  out.times = times;
  out.states = states;
  out.controls = Mat::Zero(K, n);
  out.residual = Vec::Zero(K);
  out.speed = Vec::Zero(K);
  out.radial_rate = Vec::Zero(K);
  out.radius = Vec::Zero(K);
  for (int k = 0; k < K; ++k) {
    const RadiusPoint& q = states[static_cast<std::size_t>(k)];
    require_valid(model, q);
    out.radius[k] = model.norm(q.x, q.R);
  }
  if (K == 1) return out;

  Mat Y(K, 3 * n);
  for (int k = 0; k < K; ++k) Y.row(k) = pack(states[static_cast<std::size_t>(k)]).transpose();
  Mat Ydot;
  if (state_velocities) {
    if (state_velocities->rows() != K || state_velocities->cols() != 3 * n)
      fail(ErrorKind::InvalidArgument, "state velocity array has the wrong shape");
    Ydot = *state_velocities;
  } else {
    const int order = K >= 5 ? opts.derivative_order : 2;
    Ydot = differentiate(times, Y, order).first;
  }

  std::optional<ChartPair> chart;
  int worst = 0;
  for (int k = 0; k < K; ++k) {
    const RadiusPoint& q = states[static_cast<std::size_t>(k)];
    const Frame frame = Frame::at(model, q, chart);
    chart = frame.chart();
    const Vec y = Y.row(k).transpose();
    Mat F(3 * n, n);
    for (int i = 1; i <= n; ++i) F.col(i - 1) = frame.field(i, y);
    const Vec yd = Ydot.row(k).transpose();
    const Vec u = F.colPivHouseholderQr().solve(yd);
    out.controls.row(k) = u.transpose();
    out.residual[k] = (yd - F * u).norm() / std::max(1.0, y.norm());
    const double radius = model.norm(q.x, q.R);
    out.radius[k] = radius;
    out.speed[k] = std::abs(u[0]) * model.norm(q.x, q.V);
    out.radial_rate[k] = radius * u.norm();
    if (out.residual[k] > out.residual[worst]) worst = k;
  }
  out.max_residual = out.residual[worst];
  if (out.max_residual > opts.admissibility_tol)
    fail(ErrorKind::NotAdmissible,
         "velocity leaves the distribution (residual " + std::to_string(out.max_residual) + ")",
         static_cast<std::size_t>(worst));
  return out;
}

ControlTrajectory controls_from_path(const MetricModel& model, const LiftedCurve& lifted,
                                     const ControlOptions& opts, const Mat* state_velocities) {
  return controls_from_path(model, lifted.times, lifted.states, opts, state_velocities);
}

namespace {

double integrate(const std::vector<double>& t, const Vec& f) {
  return simd::kernels().trapezoid(t.data(), f.data(), t.size());
}

}  // namespace

double length(const MetricProfile& profile, const ControlTrajectory& traj) {
  const int K = traj.size();
  if (K < 2) return 0.0;
  Vec f(K);
  for (int k = 0; k < K; ++k) {
    const double s = traj.speed[k];
    const double d = traj.radial_rate[k];
    const double r = traj.radius[k];
    if (profile.is_constant()) {
      const double a = profile.a();
      const double b = profile.b();
      f[k] = std::sqrt((a * a * s * s) / (r * r) + (b * b * d * d) / (r * r));
    } else {
      const double a = profile.a_at(r);
      const double b = profile.b_at(r);
      f[k] = std::sqrt(a * a * s * s + b * b * d * d);
    }
  }
  return integrate(traj.times, f);
}

LowerBound lower_bound_check(const MetricModel& model, const MetricProfile& profile,
                             const ControlTrajectory& traj, double geodesic_step) {
  LowerBound out;
  const int K = traj.size();
  if (K < 2) return out;
  Vec f(K);
  for (int k = 0; k < K; ++k) {
    const double r = traj.radius[k];
    const double a = profile.a_at(r);
    const double b = profile.b_at(r);
    const double ab2 = a * a + b * b;
    if (ab2 < 1.0 - 1e-12)
      fail(ErrorKind::Profile,
           "profile violates a^2 + b^2 >= 1 at |R| = " + std::to_string(r),
           static_cast<std::size_t>(k));
    f[k] = traj.speed[k] * std::sqrt(ab2);
  }
  out.length = length(profile, traj);
  out.speed_bound = integrate(traj.times, f);
  out.distance =
      geodesic_distance(model, traj.states.front().x, traj.states.back().x, geodesic_step);
  out.slack = std::min(out.length - out.speed_bound, out.speed_bound - out.distance);
  return out;
}

}  // namespace curvrad
