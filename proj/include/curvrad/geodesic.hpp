#pragma once

#include "curvrad/metric_model.hpp"
#include "curvrad/types.hpp"

namespace curvrad {

struct TangentPoint {
  Vec x;
  Vec v;
};

// Geodesic γ with γ(0)=p.x, γ̇(0)=p.v, integrated by fixed-step RK4 over
// [0,t] (t may be negative). Row k of the result is γ(k·t/N) where
// N = ceil(|t|/step). Throws LeftChart if the path leaves the chart.
Mat geodesic_path(const MetricModel& model, const TangentPoint& p, double t, double step = 1e-3);

// γ(t) of the geodesic above.
Vec exp_map(const MetricModel& model, const TangentPoint& p, double t, double step = 1e-3);

// v with exp_{x0}(v) = x1, by Newton iteration on the shooting map with a
// finite-difference Jacobian, started from the coordinate difference (or
// from `guess`). Throws NoConvergence.
Vec log_map(const MetricModel& model, const Vec& x0, const Vec& x1, double step = 1e-3,
            const Vec* guess = nullptr, double tol = 1e-11, int max_iter = 50);

// d_g(x0,x1) = |log_{x0}(x1)|_g, valid inside the injectivity radius.
double geodesic_distance(const MetricModel& model, const Vec& x0, const Vec& x1,
                         double step = 1e-3);

}  // namespace curvrad
