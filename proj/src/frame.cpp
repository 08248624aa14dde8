#include "curvrad/frame.hpp"

#include <cmath>

#include "curvrad/connection.hpp"
#include "curvrad/errors.hpp"

namespace curvrad {

FrameVector FrameVector::from_packed(const Vec& y, int n) {
  return {y.segment(0, n), y.segment(n, n), y.segment(2 * n, n)};
}

Vec FrameVector::packed() const {
  Vec y(dx.size() * 3);
  y << dx, dR, dV;
  return y;
}

ComplementBasis complement_basis(const MetricModel& model, const RadiusPoint& q,
                                 std::optional<ChartPair> previous, bool pinned, double tol) {
  const int n = model.dim();
  if (n < 3) fail(ErrorKind::InvalidArgument, "complement basis needs dimension at least 3");
  const Mat g = model.metric(q.x);
  Eigen::LLT<Mat> llt(g);
  if (llt.info() != Eigen::Success)
    fail(ErrorKind::SingularMetric, "metric of " + model.name() + " is not positive definite");
  const Mat Lt = llt.matrixU();
  // Orthonormal frame E = L^{-T}; components of w in E are Lᵀw.
  const Mat E = Lt.triangularView<Eigen::Upper>().solve(Mat::Identity(n, n));
  const Vec r = Lt * q.R;
  const Vec v = Lt * q.V;

  auto omega = [&](int i, int j) { return std::abs(r[i] * v[j] - r[j] * v[i]); };
  ChartPair best{0, 1};
  double best_val = -1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (omega(i, j) > best_val) {
        best_val = omega(i, j);
        best = {i, j};
      }
    }
  }
  const double scale = r.squaredNorm();
  if (!(best_val > tol * scale))
    fail(ErrorKind::DegenerateFrame, "R and V are linearly dependent");
  ChartPair chosen = best;
  if (previous) {
    if (pinned || omega(previous->first, previous->second) >= 0.5 * best_val) chosen = *previous;
  }

  auto ip = [&](const Vec& a, const Vec& b) { return a.dot(g * b); };
  std::vector<Vec> ortho;
  auto push = [&](Vec w) {
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : ortho) w -= ip(u, w) * u;
    const double len = std::sqrt(ip(w, w));
    if (!(len > 1e-10)) fail(ErrorKind::DegenerateFrame, "Gram-Schmidt hit a dependent vector");
    ortho.push_back(w / len);
  };
  push(q.R);
  push(q.V);
  const double radius = std::sqrt(ip(q.R, q.R));
  ComplementBasis out;
  out.chart = chosen;
  for (int k = 0; k < n; ++k) {
    if (k == chosen.first || k == chosen.second) continue;
    push(E.col(k));
    out.e.push_back(radius * ortho.back());
  }
  return out;
}

Vec jvp(const VectorField& F, const Vec& y, const Vec& v, double h) {
  const double len = v.norm();
  if (len == 0.0) return Vec::Zero(F(y).size());
  const double eps = h * std::max(1.0, y.norm()) / len;
  const Vec a = F(y - 2.0 * eps * v);
  const Vec b = F(y - eps * v);
  const Vec c = F(y + eps * v);
  const Vec d = F(y + 2.0 * eps * v);
  return ((a - d) + 8.0 * (c - b)) / (12.0 * eps);
}

Vec lie_bracket(const VectorField& F, const VectorField& G, const Vec& y, double h) {
  const Vec Fy = F(y);
  const Vec Gy = G(y);
  return jvp(G, y, Fy, h) - jvp(F, y, Gy, h);
}

FieldSpec::FieldSpec(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) fail(ErrorKind::InvalidArgument, "empty field spec");
  for (int i : indices_)
    if (i < 1 || i > 9) fail(ErrorKind::InvalidArgument, "field index out of range 1..9");
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text.size() < 2 || text[0] != 'f')
    fail(ErrorKind::Config, "field spec '" + text + "' must look like f1, f21, f121, ...");
  std::vector<int> idx;
  for (std::size_t k = 1; k < text.size(); ++k) {
    const char c = text[k];
    if (c < '1' || c > '9') fail(ErrorKind::Config, "field spec '" + text + "' has a bad index");
    idx.push_back(c - '0');
  }
  return FieldSpec(std::move(idx));
}

std::string FieldSpec::str() const {
  std::string s = "f";
  for (int i : indices_) s += static_cast<char>('0' + i);
  return s;
}

Frame::Frame(MetricModel model, std::optional<ChartPair> chart)
    : model_(std::move(model)), chart_(chart) {}

Frame Frame::at(const MetricModel& model, const RadiusPoint& q, std::optional<ChartPair> previous) {
  if (model.dim() < 3) return Frame(model);
  return Frame(model, complement_basis(model, q, previous).chart);
}

Vec Frame::field(int i, const Vec& y) const {
  const int n = model_.dim();
  if (i < 1 || i > n)
    fail(ErrorKind::InvalidArgument,
         "frame index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  const Vec x = y.segment(0, n);
  const Vec R = y.segment(n, n);
  const Vec V = y.segment(2 * n, n);
  Vec out = Vec::Zero(3 * n);
  if (i == 1) {
    const ChristoffelSymbols G = christoffel(model_, x);
    out.segment(0, n) = V;
    out.segment(n, n) = -V - G.contract(V, R);
    out.segment(2 * n, n) = R - G.contract(V, V);
  } else if (i == 2) {
    out.segment(n, n) = R;
    out.segment(2 * n, n) = V;
  } else {
    const auto basis = complement_basis(model_, RadiusPoint{x, V, R}, chart_, chart_.has_value());
    out.segment(n, n) = basis.e[static_cast<std::size_t>(i - 3)];
  }
  return out;
}

Vec Frame::eval_from(const std::vector<int>& idx, std::size_t first, const Vec& y) const {
  if (first + 1 == idx.size()) return field(idx[first], y);
  const int level = static_cast<int>(idx.size() - first) - 1;
  const double h = kBracketStep * std::pow(kBracketGrowth, level - 1);
  const int head = idx[first];
  VectorField F = [this, head](const Vec& z) { return field(head, z); };
  VectorField G = [this, &idx, first](const Vec& z) { return eval_from(idx, first + 1, z); };
  return lie_bracket(F, G, y, h);
}

Vec Frame::eval(const FieldSpec& spec, const Vec& y) const {
  return eval_from(spec.indices(), 0, y);
}

VectorField Frame::as_field(const FieldSpec& spec) const {
  return [frame = *this, spec](const Vec& y) { return frame.eval(spec, y); };
}

FrameVector frame_eval(const MetricModel& model, const RadiusPoint& q, int i) {
  model.require_domain(q.x);
  const Frame frame = Frame::at(model, q);
  return FrameVector::from_packed(frame.field(i, pack(q)), model.dim());
}

}  // namespace curvrad
