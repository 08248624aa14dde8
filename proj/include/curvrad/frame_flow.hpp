#pragma once

#include <vector>

#include "curvrad/frame.hpp"
#include "curvrad/metric_model.hpp"
#include "curvrad/radius_point.hpp"

namespace curvrad {

struct FlowOptions {
  double step = 1e-3;
  // Re-project (R,V) onto the constraint set after every step.
  bool project = true;
  // Keep every k-th state in the result (the final state is always kept).
  int record_every = 1;
};

struct FlowResult {
  std::vector<double> times;
  std::vector<RadiusPoint> states;
  // Largest absolute constraint residual seen right after an RK4 step,
  // before any projection.
  double max_drift = 0.0;
  // Largest g-distance moved by a projection.
  double max_projection = 0.0;

  const RadiusPoint& final_state() const { return states.back(); }
};

// RK4 flow of a frame field or nested bracket for time t from q0. The
// complement chart pair is re-chosen with hysteresis at the start of each
// step and held fixed within it. Throws LeftChart.
FlowResult flow(const MetricModel& model, const FieldSpec& field, const RadiusPoint& q0, double t,
                const FlowOptions& opts = {});

}  // namespace curvrad
