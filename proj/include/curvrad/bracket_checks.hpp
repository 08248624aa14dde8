#pragma once

#include <array>

#include "curvrad/frame.hpp"
#include "curvrad/metric_model.hpp"
#include "curvrad/radius_point.hpp"

namespace curvrad {

// Ranks of the bracket flag at q: span{f_i}, plus all [f_i,f_j], plus all
// [f_i,[f_j,f_k]]. A singular value counts when it exceeds rank_tol times the
// largest one. The expected value is (n, 2n−1, 3n−2).
std::array<int, 3> growth_vector(const MetricModel& model, const RadiusPoint& q,
                                 double rank_tol = 1e-8);

// Sup-norm gap between the numerical [f₂,f₁] and its closed form
// (V, −Γ(V,R), −Γ(V,V)).
double f21_formula_residual(const MetricModel& model, const RadiusPoint& q);

// Sup-norm gap between f₁ − [f₂,f₁] and (0, −V, R).
double x12_residual(const MetricModel& model, const RadiusPoint& q);

struct FactorizationResidual {
  double f21_vs_exp_v;   // sup |π(e^{s·f₂₁}q) − exp_x(sV)| over the step grid
  double f121_vs_exp_r;  // sup |π(e^{s·f₁₂₁}q) − exp_x(sR)|

  double max() const { return f21_vs_exp_v > f121_vs_exp_r ? f21_vs_exp_v : f121_vs_exp_r; }
};

FactorizationResidual geodesic_factorization_residual(const MetricModel& model,
                                                      const RadiusPoint& q, double t = 1.0,
                                                      double step = 1e-3);

// Closed form of f₁₁₂₁ in coordinates: (−V, Γ(R,V) − Rm(V,R)R, Γ(V,V) − Rm(V,R)V).
FrameVector f1121_expected(const MetricModel& model, const RadiusPoint& q);

// Sup-norm gap between the nested numerical bracket [f₁,[f₁,[f₂,f₁]]] and
// f1121_expected().
double f1121_residual(const MetricModel& model, const RadiusPoint& q);

struct StructureC1 {
  double c1 = 0.0;        // coefficient of f₁
  double expected = 0.0;  // |R|²·sec(R,V)
  double condition = 0.0;
  double fit_residual = 0.0;
  Vec coefficients;
};

// Expands f₁₁₂₁ in the basis {f_i, f_{1i}, f_{1i1}} (i ≥ 2 for the brackets)
// by column-pivoted QR. Throws IllConditionedBasis when the basis condition
// number exceeds max_condition.
StructureC1 structure_c1(const MetricModel& model, const RadiusPoint& q,
                         double max_condition = 1e8);

// Largest [f₂,f_j] (j ≥ 3) and largest component of [f_i,f_j] (2 ≤ i < j)
// outside span{f₃…fₙ}.
double frame_commutation_residual(const MetricModel& model, const RadiusPoint& q);

// For φ(x) = r·A·x + b on flat ℝⁿ (A orthogonal, det 1), the largest gap
// between (φ_⋆⊕φ_⋆)f_i(q) and f_i(Φ(q)) over i = 1, 2.
double similarity_pushforward_residual(const RadiusPoint& q, double r, const Mat& A, const Vec& b);

// Surface frame on TM∖{0} in coordinates (x, R) with V = R^⊥ (rotation by +90°
// in the metric): f₁ = (V, −V − Γ(V,R)).
Vec surface_f1(const MetricModel& model, const Vec& xr);

// |[X⃗, f₁](x,R)| where X⃗ = (X, DX·R) is the complete lift of the base field X.
// Requires dim 2.
double homothety_generator_residual(const MetricModel& model, const VectorField& X, const Vec& x,
                                    const Vec& R);

}  // namespace curvrad
