#include "curvrad/bracket_checks.hpp"

#include <cmath>

#include "curvrad/connection.hpp"
#include "curvrad/errors.hpp"
#include "curvrad/frame_flow.hpp"
#include "curvrad/geodesic.hpp"

namespace curvrad {
namespace {

int numerical_rank(const Mat& cols, double rank_tol) {
  Eigen::JacobiSVD<Mat> svd(cols);
  const Vec& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s[i] > rank_tol * s[0]) ++rank;
  return rank;
}

Mat hstack(const std::vector<Vec>& cols) {
  Mat m(cols.front().size(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = cols[k];
  return m;
}

}  // namespace

std::array<int, 3> growth_vector(const MetricModel& model, const RadiusPoint& q, double rank_tol) {
  require_valid(model, q);
  const int n = model.dim();
  const Frame frame = Frame::at(model, q);
  const Vec y = pack(q);
  std::vector<Vec> cols;
  for (int i = 1; i <= n; ++i) cols.push_back(frame.field(i, y));
  const int r1 = numerical_rank(hstack(cols), rank_tol);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) cols.push_back(frame.eval(FieldSpec({i, j}), y));
  const int r2 = numerical_rank(hstack(cols), rank_tol);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) cols.push_back(frame.eval(FieldSpec({i, j, k}), y));
  const int r3 = numerical_rank(hstack(cols), rank_tol);
  return {r1, r2, r3};
}

double f21_formula_residual(const MetricModel& model, const RadiusPoint& q) {
  require_valid(model, q);
  const Frame frame = Frame::at(model, q);
  const Vec numeric = frame.eval(FieldSpec({2, 1}), pack(q));
  const ChristoffelSymbols G = christoffel(model, q.x);
  const FrameVector closed{q.V, -G.contract(q.V, q.R), -G.contract(q.V, q.V)};
  return (numeric - closed.packed()).cwiseAbs().maxCoeff();
}

double x12_residual(const MetricModel& model, const RadiusPoint& q) {
  require_valid(model, q);
  const Frame frame = Frame::at(model, q);
  const Vec y = pack(q);
  const Vec x12 = frame.field(1, y) - frame.eval(FieldSpec({2, 1}), y);
  const FrameVector closed{Vec::Zero(model.dim()), -q.V, q.R};
  return (x12 - closed.packed()).cwiseAbs().maxCoeff();
}

FactorizationResidual geodesic_factorization_residual(const MetricModel& model,
                                                      const RadiusPoint& q, double t,
                                                      double step) {
  require_valid(model, q);
  FlowOptions opts;
  opts.step = step;
  auto compare = [&](const FieldSpec& field, const Vec& v) {
    const FlowResult fl = flow(model, field, q, t, opts);
    const Mat geo = geodesic_path(model, {q.x, v}, t, step);
    double worst = 0.0;
    for (std::size_t k = 0; k < fl.states.size(); ++k)
      worst = std::max(worst, (fl.states[k].x - geo.row(static_cast<Eigen::Index>(k)).transpose())
                                  .norm());
    return worst;
  };
  return {compare(FieldSpec({2, 1}), q.V), compare(FieldSpec({1, 2, 1}), q.R)};
}

FrameVector f1121_expected(const MetricModel& model, const RadiusPoint& q) {
  const ChristoffelSymbols G = christoffel(model, q.x);
  return {-q.V, G.contract(q.R, q.V) - riemann(model, q.x, q.V, q.R, q.R),
          G.contract(q.V, q.V) - riemann(model, q.x, q.V, q.R, q.V)};
}

double f1121_residual(const MetricModel& model, const RadiusPoint& q) {
  require_valid(model, q);
  const Frame frame = Frame::at(model, q);
  const Vec numeric = frame.eval(FieldSpec({1, 1, 2, 1}), pack(q));
  return (numeric - f1121_expected(model, q).packed()).cwiseAbs().maxCoeff();
}

StructureC1 structure_c1(const MetricModel& model, const RadiusPoint& q, double max_condition) {
  require_valid(model, q);
  const int n = model.dim();
  const Frame frame = Frame::at(model, q);
  const Vec y = pack(q);
  std::vector<Vec> cols;
  for (int i = 1; i <= n; ++i) cols.push_back(frame.field(i, y));
  for (int i = 2; i <= n; ++i) cols.push_back(frame.eval(FieldSpec({1, i}), y));
  for (int i = 2; i <= n; ++i) cols.push_back(frame.eval(FieldSpec({1, i, 1}), y));
  const Mat B = hstack(cols);

  Eigen::JacobiSVD<Mat> svd(B);
  const Vec& s = svd.singularValues();
  StructureC1 out;
  out.condition = s[s.size() - 1] > 0.0 ? s[0] / s[s.size() - 1]
                                         : std::numeric_limits<double>::infinity();
  if (!(out.condition <= max_condition))
    fail(ErrorKind::IllConditionedBasis,
         "bracket basis condition number " + std::to_string(out.condition));

  const Vec target = frame.eval(FieldSpec({1, 1, 2, 1}), y);
  out.coefficients = B.colPivHouseholderQr().solve(target);
  out.fit_residual = (B * out.coefficients - target).cwiseAbs().maxCoeff();
  out.c1 = out.coefficients[0];
  const double r2 = model.inner(q.x, q.R, q.R);
  out.expected = r2 * sectional_curvature(model, q.x, q.R, q.V);
  return out;
}

double frame_commutation_residual(const MetricModel& model, const RadiusPoint& q) {
  require_valid(model, q);
  const int n = model.dim();
  if (n < 3) return 0.0;
  const Frame frame = Frame::at(model, q);
  const Vec y = pack(q);
  std::vector<Vec> span;
  for (int j = 3; j <= n; ++j) span.push_back(frame.field(j, y));
  const Mat S = hstack(span);
  const auto qr = S.colPivHouseholderQr();
  double worst = 0.0;
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Vec b = frame.eval(FieldSpec({i, j}), y);
      const Vec outside = i == 2 ? b : Vec(b - S * qr.solve(b));
      worst = std::max(worst, outside.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double similarity_pushforward_residual(const RadiusPoint& q, double r, const Mat& A, const Vec& b) {
  const int n = q.dim();
  const MetricModel model = euclidean(n);
  const RadiusPoint mapped{r * A * q.x + b, r * A * q.V, r * A * q.R};
  double worst = 0.0;
  for (int i = 1; i <= 2; ++i) {
    const FrameVector f = frame_eval(model, q, i);
    const FrameVector pushed{r * A * f.dx, r * A * f.dR, r * A * f.dV};
    const FrameVector at_image = frame_eval(model, mapped, i);
    worst = std::max(worst, (pushed.packed() - at_image.packed()).cwiseAbs().maxCoeff());
  }
  return worst;
}

Vec surface_f1(const MetricModel& model, const Vec& xr) {
  if (model.dim() != 2) fail(ErrorKind::InvalidArgument, "surface frame needs a 2-dimensional model");
  const Vec x = xr.head(2);
  const Vec R = xr.tail(2);
  const Mat g = model.metric(x);
  const Vec gR = g * R;
  Vec V(2);
  V << -gR[1], gR[0];
  const double vlen = std::sqrt(V.dot(g * V));
  if (!(vlen > 0.0)) fail(ErrorKind::InvalidArgument, "surface frame needs R != 0");
  V *= std::sqrt(R.dot(gR)) / vlen;
  Vec out(4);
  out.head(2) = V;
  out.tail(2) = -V - gamma_contract(model, x, V, R);
  return out;
}

double homothety_generator_residual(const MetricModel& model, const VectorField& X, const Vec& x,
                                    const Vec& R) {
  if (model.dim() != 2)
    fail(ErrorKind::InvalidArgument, "homothety generator check needs a 2-dimensional model");
  VectorField lift = [&X](const Vec& xr) -> Vec {
    const Vec base = xr.head(2);
    Vec out(4);
    out.head(2) = X(base);
    out.tail(2) = jvp(X, base, xr.tail(2), 1e-4);
    return out;
  };
  VectorField f1 = [&model](const Vec& xr) { return surface_f1(model, xr); };
  Vec xr(4);
  xr << x, R;
  return lie_bracket(lift, f1, xr, Frame::kBracketStep).norm();
}

}  // namespace curvrad
