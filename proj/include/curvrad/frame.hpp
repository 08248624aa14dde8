#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvrad/metric_model.hpp"
#include "curvrad/radius_point.hpp"
#include "curvrad/types.hpp"

namespace curvrad {

// Tangent vector to TM⊕TM in induced coordinates (x, R, V).
struct FrameVector {
  Vec dx;
  Vec dR;
  Vec dV;

  static FrameVector from_packed(const Vec& y, int n);
  Vec packed() const;
};

using ChartPair = std::pair<int, int>;

struct ComplementBasis {
  std::vector<Vec> e;  // e₃ … eₙ
  ChartPair chart;     // (i, j) with i < j, zero based
};

// e₃…eₙ: g-orthonormalize {R, V, E_k : k ∉ {i,j}} and rescale to |R|, where
// E is the g-orthonormalized coordinate frame and (i,j) maximizes
// |ω_ij(R,V)| = |R̂_i V̂_j − R̂_j V̂_i|. With `previous`, that pair is kept while
// its |ω| is at least half the maximum. With `pinned`, `previous` is used
// unconditionally. Requires n ≥ 3.
ComplementBasis complement_basis(const MetricModel& model, const RadiusPoint& q,
                                 std::optional<ChartPair> previous = std::nullopt,
                                 bool pinned = false, double tol = 1e-12);

// A vector field on the ambient packed coordinates [x, R, V].
using VectorField = std::function<Vec(const Vec&)>;

// DF(y)·v by a fourth-order central stencil with step h·max(1,|y|)/|v|.
Vec jvp(const VectorField& F, const Vec& y, const Vec& v, double h);

// [F,G](y) = DG·F − DF·G.
Vec lie_bracket(const VectorField& F, const VectorField& G, const Vec& y, double h = 1e-3);

// A frame field f_i or a right-nested bracket f_{i1 i2 … ik} =
// [f_{i1}, [f_{i2}, … [f_{i(k-1)}, f_{ik}]]], written "f121" and so on.
// Indices are single digits 1…9.
class FieldSpec {
 public:
  FieldSpec() = default;
  explicit FieldSpec(std::vector<int> indices);
  static FieldSpec parse(const std::string& text);

  const std::vector<int>& indices() const { return indices_; }
  int depth() const { return static_cast<int>(indices_.size()) - 1; }
  std::string str() const;

 private:
  std::vector<int> indices_;
};

// The frame f₁…fₙ on ℛ(M,g), extended to the ambient space by the same
// coordinate formulas:
//   f₁ = (V, −V − Γ(V,R), R − Γ(V,V)),  f₂ = (0, R, V),  f_j = (0, e_j, 0).
// The complement chart pair is fixed at construction so that finite
// differences around a point never see a basis switch.
class Frame {
 public:
  explicit Frame(MetricModel model, std::optional<ChartPair> chart = std::nullopt);
  // Pins the chart pair chosen at q.
  static Frame at(const MetricModel& model, const RadiusPoint& q,
                  std::optional<ChartPair> previous = std::nullopt);

  const MetricModel& model() const { return model_; }
  int n() const { return model_.dim(); }
  std::optional<ChartPair> chart() const { return chart_; }

  Vec field(int i, const Vec& y) const;
  Vec eval(const FieldSpec& spec, const Vec& y) const;
  VectorField as_field(const FieldSpec& spec) const;

  // Base finite-difference step for the innermost bracket; each further
  // nesting level multiplies it by kBracketGrowth.
  static constexpr double kBracketStep = 1e-3;
  static constexpr double kBracketGrowth = 3.0;

 private:
  Vec eval_from(const std::vector<int>& idx, std::size_t first, const Vec& y) const;

  MetricModel model_;
  std::optional<ChartPair> chart_;
};

// f_i(q) as a FrameVector (i is one based).
FrameVector frame_eval(const MetricModel& model, const RadiusPoint& q, int i);

}  // namespace curvrad
