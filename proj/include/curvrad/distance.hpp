#pragma once

#include <vector>

#include "curvrad/connector.hpp"
#include "curvrad/controls.hpp"
#include "curvrad/profile.hpp"

namespace curvrad {

struct DistanceOptions {
  ConnectorOptions connector;
  ControlOptions controls;
  double geodesic_step = 1e-3;
};

struct DistanceRow {
  double kappa = 0.0;
  double connector_length = 0.0;  // Riemannian length of the connector
  double g_length = 0.0;          // sub-Riemannian length of its lift
  double lower_bound = 0.0;       // d_g(x0, x1)
  double slack = 0.0;             // from lower_bound_check
  double deviation = 0.0;         // sup chart distance to the geodesic
  double radius_spread = 0.0;     // sup ||R| − 1/κ|
  double rate_gap = 0.0;          // sup ||D_tR| − |γ̇||
  int iterations = 0;
};

struct DistanceEstimate {
  std::vector<DistanceRow> rows;
  double geodesic_distance = 0.0;
  double best = 0.0;  // smallest sub-Riemannian length in the series
};

// For each κ of a strictly decreasing positive schedule: connect x0 to x1
// with an arc of geodesic curvature κ (warm-started from the previous κ),
// lift it, and measure its sub-Riemannian length. The lengths approach
// d_g(x0,x1) from above as κ → 0. Coincident endpoints give an empty series
// and estimate 0.
DistanceEstimate distance_estimate(const MetricModel& model, const MetricProfile& profile,
                                   const Vec& x0, const Vec& x1,
                                   const std::vector<double>& kappa_schedule,
                                   const DistanceOptions& opts = {});

// Sup chart distance between each connector, reparametrized to [0,1], and
// the geodesic s ↦ exp_{x0}(s·log_{x0}(x1)), one value per κ.
std::vector<double> minimizing_sequence_convergence(const MetricModel& model, const Vec& x0,
                                                    const Vec& x1, const MetricProfile& profile,
                                                    const std::vector<double>& kappa_schedule,
                                                    const DistanceOptions& opts = {});

}  // namespace curvrad
