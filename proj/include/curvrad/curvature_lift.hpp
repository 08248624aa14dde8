#pragma once

#include <vector>

#include "curvrad/metric_model.hpp"
#include "curvrad/radius_point.hpp"
#include "curvrad/sampled_curve.hpp"

namespace curvrad {

struct LiftOptions {
  double kappa_min = 1e-8;
  double speed_tol = 1e-10;
  double constraint_tol = 1e-6;
};

struct LiftedCurve {
  std::vector<double> times;
  std::vector<RadiusPoint> states;
  std::vector<double> kappa;
  int sign = 1;

  int size() const { return static_cast<int>(states.size()); }
};

// κ_g = |π_{γ̇⊥}(D_tγ̇)| / |γ̇|² at sample k.
double geodesic_curvature(const MetricModel& model, const SampledCurve& curve, int k,
                          const LiftOptions& opts = {});

// R_g = (1/κ_g)·n̂, n̂ the unit normal part of D_tγ̇. Throws KappaVanishes.
Vec curvature_radius(const MetricModel& model, const SampledCurve& curve, int k,
                     const LiftOptions& opts = {});

// c_±(γ) = (γ, ±|R|γ̇/|γ̇|, R) at every sample.
LiftedCurve lift(const MetricModel& model, const SampledCurve& curve, int sign,
                 const LiftOptions& opts = {});

// sup over samples and components of |R_{λg}(γ) − R_g(γ)|.
double homothety_invariance_check(const MetricModel& model, const SampledCurve& curve,
                                  double lambda, const LiftOptions& opts = {});

}  // namespace curvrad
