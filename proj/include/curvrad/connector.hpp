#pragma once

#include <limits>
#include <optional>

#include "curvrad/curvature_lift.hpp"
#include "curvrad/metric_model.hpp"
#include "curvrad/sampled_curve.hpp"

namespace curvrad {

struct ShootingProblem {
  MetricModel model;
  Vec x0;
  Vec x1;
  double kappa = 0.0;
  double max_length = std::numeric_limits<double>::infinity();
};

struct ConnectorOptions {
  int steps = 2000;          // RK4 steps per trial curve
  double tol = 1e-8;         // endpoint tolerance in chart units
  int max_iter = 50;
  double geodesic_step = 1e-3;
  // Warm start (angles θ₁…θ_{n−1} and duration); otherwise derived from the
  // geodesic direction log_{x0}(x1).
  std::optional<Vec> initial_angles;
  std::optional<double> initial_duration;
};

// Unit tangent direction X(θ) = (cos θ_{n−1}·s(θ₁…θ_{n−2}), sin θ_{n−1}) in an
// orthonormal frame, s the hyperspherical unit vector in ℝ^{n−1}. Turning
// θ_{n−1} by π/2 gives ∂X/∂θ_{n−1}.
Vec direction_from_angles(const Vec& angles);
Vec angles_from_direction(const Vec& unit);

struct Connector {
  SampledCurve curve;       // arc-length parametrized, analytic derivatives
  std::optional<LiftedCurve> lift;  // exact c₊ lift (κ > 0 only)
  Mat state_velocities;     // packed [ẋ, Ṙ, V̇] along the lift
  Vec angles;
  double duration = 0.0;    // = length, the curve has unit speed
  int iterations = 0;
  double endpoint_error = 0.0;
};

// Curve of constant geodesic curvature κ from x0 to x1: integrate
//   γ̇ = Σ X^j(θ(t)) e_j,  D_t e_j = 0,  θ_{n−1}(t) = θ_{n−1}(0) + κt,
// from an orthonormal frame at x0 and solve for the initial angles and the
// duration by damped Newton iteration on the endpoint map (finite-difference
// Jacobian). Throws Unreachable when κ·d_g(x0,x1) > 2 and NoConvergence when
// the iteration fails.
Connector constant_curvature_connect(const ShootingProblem& prob, const ConnectorOptions& opts = {});

}  // namespace curvrad
