#pragma once

#include "curvrad/metric_model.hpp"
#include "curvrad/types.hpp"

namespace curvrad {

// A point (x, V, R) of the manifold of curvature radii: R and V are
// g-orthogonal tangent vectors at x of equal positive length.
struct RadiusPoint {
  Vec x;
  Vec V;
  Vec R;

  int dim() const { return static_cast<int>(x.size()); }
};

// Ambient coordinates on TM⊕TM are packed as [x, R, V].
Vec pack(const RadiusPoint& q);
RadiusPoint unpack(const Vec& y, int n);

struct ConstraintResidual {
  double orthogonality;  // |⟨R,V⟩|
  double norm_gap;       // ||R| − |V||
  double radius;         // |R|

  double max() const { return orthogonality > norm_gap ? orthogonality : norm_gap; }
};

ConstraintResidual constraint_residual(const MetricModel& model, const RadiusPoint& q);

// Validity with the tolerance scaled by |R|: |⟨R,V⟩| ≤ tol·|R|² and
// ||R|−|V|| ≤ tol·|R|, and |R| > 0.
bool is_valid(const MetricModel& model, const RadiusPoint& q, double tol = 1e-6);
// Throws Error(Domain) or Error(InvalidArgument) describing the violation.
void require_valid(const MetricModel& model, const RadiusPoint& q, double tol = 1e-6);

// Nearest-point style projection onto {⟨R,V⟩ = 0, |R| = |V|}: symmetric
// (Löwdin) orthogonalization of the normalized pair, then both lengths set to
// their mean. `distance` receives the g-norm of the (R,V) displacement.
RadiusPoint project_to_constraints(const MetricModel& model, const RadiusPoint& q,
                                   double* distance = nullptr);

}  // namespace curvrad
