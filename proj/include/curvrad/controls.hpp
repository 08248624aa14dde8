#pragma once

#include <vector>

#include "curvrad/curvature_lift.hpp"
#include "curvrad/metric_model.hpp"
#include "curvrad/profile.hpp"
#include "curvrad/radius_point.hpp"

namespace curvrad {

struct ControlOptions {
  // Bound on |ẏ − F·u| / max(1, |y|) per sample, y the packed state.
  double admissibility_tol = 1e-4;
  // Stencil order for finite-difference state velocities.
  int derivative_order = 4;
};

// An admissible curve with its controls in the frame:
//   γ̇ = u₁V,  D_tR = −u₁V + u₂R + Σ_{j≥3} u_j e_j,  D_tV = u₁R + u₂V.
struct ControlTrajectory {
  std::vector<double> times;
  std::vector<RadiusPoint> states;
  Mat controls;      // K × n
  Vec residual;      // per-sample admissibility residual
  Vec speed;         // |γ̇| = |u₁|·|V|
  Vec radial_rate;   // |D_tR| = |R|·|u|
  Vec radius;        // |R|
  double max_residual = 0.0;

  int size() const { return static_cast<int>(states.size()); }
};

// Per-sample least squares of the state velocity against the frame matrix.
// Velocities come from `state_velocities` (packed [ẋ, Ṙ, V̇] rows) when
// given, otherwise from finite differences of the states. Throws
// NotAdmissible with the worst sample index when the residual exceeds the
// tolerance.
ControlTrajectory controls_from_path(const MetricModel& model, const std::vector<double>& times,
                                     const std::vector<RadiusPoint>& states,
                                     const ControlOptions& opts = {},
                                     const Mat* state_velocities = nullptr);

ControlTrajectory controls_from_path(const MetricModel& model, const LiftedCurve& lifted,
                                     const ControlOptions& opts = {},
                                     const Mat* state_velocities = nullptr);

// Trapezoidal length of the trajectory for the profile.
double length(const MetricProfile& profile, const ControlTrajectory& traj);

struct LowerBound {
  double length = 0.0;
  double speed_bound = 0.0;  // ∫|γ̇|·√(a² + b²)
  double distance = 0.0;     // d_g between the endpoints
  double slack = 0.0;        // min(length − speed_bound, speed_bound − distance)
};

// Evaluates the chain length ≥ ∫|γ̇|√(a²+b²) ≥ d_g(endpoints). Requires
// a² + b² ≥ 1 at every sampled radius (throws Profile otherwise).
LowerBound lower_bound_check(const MetricModel& model, const MetricProfile& profile,
                             const ControlTrajectory& traj, double geodesic_step = 1e-3);

}  // namespace curvrad
