#include "curvrad/frame_flow.hpp"

#include <algorithm>

#include "curvrad/errors.hpp"
#include "curvrad/integrator.hpp"

namespace curvrad {

FlowResult flow(const MetricModel& model, const FieldSpec& field, const RadiusPoint& q0, double t,
                const FlowOptions& opts) {
  if (!(opts.step > 0.0)) fail(ErrorKind::InvalidArgument, "flow step must be positive");
  const int n = model.dim();
  require_valid(model, q0);
  for (int i : field.indices())
    if (i > n)
      fail(ErrorKind::InvalidArgument,
           "field " + field.str() + " uses an index above the dimension " + std::to_string(n));

  FlowResult out;
  out.times.push_back(0.0);
  out.states.push_back(q0);
  if (t == 0.0) return out;

  const int steps = step_count(t, opts.step);
  const double h = t / steps;
  const int every = std::max(1, opts.record_every);
  std::optional<ChartPair> chart;
  RadiusPoint q = q0;

  for (int k = 1; k <= steps; ++k) {
    const Frame frame = Frame::at(model, q, chart);
    chart = frame.chart();
    auto rhs = [&](const Vec& y) -> Vec {
      if (!model.in_domain(y.head(n)))
        fail(ErrorKind::LeftChart, "flow of " + field.str() + " left the chart of " + model.name(),
             static_cast<std::size_t>(k));
      return frame.eval(field, y);
    };
    const Vec y = rk4_step(rhs, pack(q), h);
    q = unpack(y, n);
    if (!model.in_domain(q.x))
      fail(ErrorKind::LeftChart, "flow of " + field.str() + " left the chart of " + model.name(),
           static_cast<std::size_t>(k));
    if (!q.x.allFinite() || !q.R.allFinite() || !q.V.allFinite())
      fail(ErrorKind::NonFinite, "flow produced non-finite state", static_cast<std::size_t>(k));
    out.max_drift = std::max(out.max_drift, constraint_residual(model, q).max());
    if (opts.project) {
      double moved = 0.0;
      q = project_to_constraints(model, q, &moved);
      out.max_projection = std::max(out.max_projection, moved);
    }
    if (k % every == 0 || k == steps) {
      out.times.push_back(k * h);
      out.states.push_back(q);
    }
  }
  return out;
}

}  // namespace curvrad
