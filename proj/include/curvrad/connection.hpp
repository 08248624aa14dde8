#pragma once

#include "curvrad/metric_model.hpp"
#include "curvrad/sampled_curve.hpp"
#include "curvrad/types.hpp"

namespace curvrad {

// Γ^μ_{αβ}(x): analytic when the model provides them, otherwise the
// Levi-Civita formula with central differences of step fd_step·max(1,|x_α|),
// symmetrized in (α,β).
ChristoffelSymbols christoffel(const MetricModel& model, const Vec& x);

// Γ(X,Y)^μ = Σ Γ^μ_{αβ} X^α Y^β
Vec gamma_contract(const MetricModel& model, const Vec& x, const Vec& X, const Vec& Y);

// D_tW = Ẇ + Γ(γ̇, W) at every sample. `field` holds one row per sample.
// Ẇ uses the curve's stencil order (order 4 for curves with analytic
// derivatives), so endpoint rows are one order less accurate.
Mat covariant_derivative(const MetricModel& model, const SampledCurve& curve, const Mat& field);

// R(X,Y)Z = (X·∂)Γ(Y,Z) − (Y·∂)Γ(X,Z) + Γ(X,Γ(Y,Z)) − Γ(Y,Γ(X,Z)), with the
// directional derivatives of Γ taken by fourth-order central differences.
Vec riemann(const MetricModel& model, const Vec& x, const Vec& X, const Vec& Y, const Vec& Z);

// ⟨R(X,Y)Y,X⟩ / (|X|²|Y|² − ⟨X,Y⟩²). Throws DegeneratePlane when the Gram
// determinant is below tol·|X|²|Y|².
double sectional_curvature(const MetricModel& model, const Vec& x, const Vec& X, const Vec& Y,
                           double tol = 1e-12);

}  // namespace curvrad
