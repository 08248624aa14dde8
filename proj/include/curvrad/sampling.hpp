#pragma once

#include <random>

#include "curvrad/metric_model.hpp"
#include "curvrad/radius_point.hpp"

namespace curvrad {

// All randomness in the library flows through this generator type so that a
// seed fixes every sampled point.
using Rng = std::mt19937_64;

// A chart point away from the chart boundary: [-1,1]ⁿ for flat and custom
// models, colatitude in [0.5, π−0.5] on the sphere, y in [0.5, 2] on the
// half-plane.
Vec random_chart_point(const MetricModel& model, Rng& rng);

// A valid radius point at a random chart point with |R| = |V| drawn from
// [radius_min, radius_max] and random orthogonal directions.
RadiusPoint random_radius_point(const MetricModel& model, Rng& rng, double radius_min = 0.5,
                                double radius_max = 2.0);

// Same at a given base point and exact radius.
RadiusPoint random_radius_point_at(const MetricModel& model, const Vec& x, double radius, Rng& rng);

}  // namespace curvrad
