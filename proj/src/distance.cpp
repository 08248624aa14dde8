#include "curvrad/distance.hpp"

#include <cmath>

#include "curvrad/errors.hpp"
#include "curvrad/geodesic.hpp"

namespace curvrad {

DistanceEstimate distance_estimate(const MetricModel& model, const MetricProfile& profile,
                                   const Vec& x0, const Vec& x1,
                                   const std::vector<double>& kappa_schedule,
                                   const DistanceOptions& opts) {
  for (std::size_t k = 0; k < kappa_schedule.size(); ++k) {
    if (!(kappa_schedule[k] > 0.0))
      fail(ErrorKind::InvalidArgument, "kappa schedule entries must be positive");
    if (k > 0 && !(kappa_schedule[k] < kappa_schedule[k - 1]))
      fail(ErrorKind::InvalidArgument, "kappa schedule must be strictly decreasing");
  }
  model.require_domain(x0);
  model.require_domain(x1);
  DistanceEstimate out;
  if ((x1 - x0).norm() == 0.0) return out;

  const Vec v = log_map(model, x0, x1, opts.geodesic_step);
  out.geodesic_distance = model.norm(x0, v);
  const int steps = opts.connector.steps;
  const Mat geodesic = geodesic_path(model, {x0, v}, 1.0, 1.0 / steps);

  ConnectorOptions copts = opts.connector;
  out.best = std::numeric_limits<double>::infinity();
  for (double kappa : kappa_schedule) {
    const Connector conn = constant_curvature_connect({model, x0, x1, kappa}, copts);
    copts.initial_angles = conn.angles;
    copts.initial_duration = conn.duration;

    const ControlTrajectory traj =
        controls_from_path(model, *conn.lift, opts.controls, &conn.state_velocities);
    const LowerBound lb = lower_bound_check(model, profile, traj, opts.geodesic_step);

    DistanceRow row;
    row.kappa = kappa;
    row.connector_length = conn.duration;
    row.g_length = lb.length;
    row.lower_bound = out.geodesic_distance;
    row.slack = lb.slack;
    row.iterations = conn.iterations;
    for (int k = 0; k <= steps; ++k) {
      row.deviation = std::max(
          row.deviation, (conn.curve.points().row(k) - geodesic.row(k)).norm());
      row.radius_spread = std::max(row.radius_spread, std::abs(traj.radius[k] - 1.0 / kappa));
      row.rate_gap = std::max(row.rate_gap, std::abs(traj.radial_rate[k] - traj.speed[k]));
    }
    out.best = std::min(out.best, row.g_length);
    out.rows.push_back(row);
  }
  if (out.rows.empty()) out.best = out.geodesic_distance;
  return out;
}

std::vector<double> minimizing_sequence_convergence(const MetricModel& model, const Vec& x0,
                                                    const Vec& x1, const MetricProfile& profile,
                                                    const std::vector<double>& kappa_schedule,
                                                    const DistanceOptions& opts) {
  const DistanceEstimate est = distance_estimate(model, profile, x0, x1, kappa_schedule, opts);
  std::vector<double> out;
  for (const auto& row : est.rows) out.push_back(row.deviation);
  return out;
}

}  // namespace curvrad
