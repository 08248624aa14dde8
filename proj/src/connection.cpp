#include "curvrad/connection.hpp"

#include <algorithm>
#include <cmath>

#include "curvrad/errors.hpp"
#include "curvrad/finite_difference.hpp"

namespace curvrad {
namespace {

ChristoffelSymbols christoffel_fd(const MetricModel& model, const Vec& x) {
  const int n = model.dim();
  const Mat g = model.metric(x);
  Eigen::LLT<Mat> llt(g);
  const double diag_max = g.diagonal().cwiseAbs().maxCoeff();
  if (llt.info() != Eigen::Success || !(diag_max > 0.0))
    fail(ErrorKind::SingularMetric, "metric of " + model.name() + " is not positive definite");
  const Vec L2 = llt.matrixL().toDenseMatrix().diagonal().array().square();
  if (L2.minCoeff() < 1e-14 * diag_max)
    fail(ErrorKind::SingularMetric, "metric of " + model.name() + " is numerically singular");

  // dg[a] = ∂_a g
  std::vector<Mat> dg(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const double h = model.fd_step() * std::max(1.0, std::abs(x[a]));
    Vec xp = x, xm = x;
    xp[a] += h;
    xm[a] -= h;
    dg[static_cast<std::size_t>(a)] = (model.metric(xp) - model.metric(xm)) / (2.0 * h);
  }

  ChristoffelSymbols G(n);
  Vec lowered(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      for (int nu = 0; nu < n; ++nu) {
        const double s1 = dg[a](nu, b) + dg[b](nu, a);
        const double s2 = dg[a](b, nu) + dg[b](a, nu);
        // Average the two orderings so asymmetric rounding in g cannot leak in.
        const double sym = 0.5 * (s1 + s2);
        const double cross = 0.5 * (dg[nu](a, b) + dg[nu](b, a));
        lowered[nu] = 0.5 * (sym - cross);
      }
      const Vec up = llt.solve(lowered);
      for (int mu = 0; mu < n; ++mu) {
        G(mu, a, b) = up[mu];
        G(mu, b, a) = up[mu];
      }
    }
  }
  return G;
}

}  // namespace

ChristoffelSymbols christoffel(const MetricModel& model, const Vec& x) {
  model.require_domain(x);
  if (model.has_analytic_christoffel()) return model.christoffel_fn()(x);
  return christoffel_fd(model, x);
}

Vec gamma_contract(const MetricModel& model, const Vec& x, const Vec& X, const Vec& Y) {
  return christoffel(model, x).contract(X, Y);
}

Mat covariant_derivative(const MetricModel& model, const SampledCurve& curve, const Mat& field) {
  if (field.rows() != curve.size() || field.cols() != curve.dim())
    fail(ErrorKind::InvalidArgument, "field must have one vector per curve sample");
  const int order = curve.analytic_derivatives() ? 4 : curve.derivative_order();
  const auto d = differentiate(curve.times(), field, order);
  Mat out = d.first;
  for (int k = 0; k < curve.size(); ++k) {
    const Vec x = curve.point(k);
    out.row(k) += gamma_contract(model, x, curve.velocity(k), field.row(k).transpose()).transpose();
  }
  return out;
}

namespace {

// (X·∂)Γ(Y,Z) by a five-point central stencil along X.
Vec directional_gamma(const MetricModel& model, const Vec& x, const Vec& X, const Vec& Y,
                      const Vec& Z) {
  const double len = X.norm();
  if (len == 0.0) return Vec::Zero(x.size());
  const double h = 1e-4 * std::max(1.0, x.norm()) / len;
  auto G = [&](double s) { return gamma_contract(model, x + s * X, Y, Z); };
  return ((G(-2.0 * h) - G(2.0 * h)) + 8.0 * (G(h) - G(-h))) / (12.0 * h);
}

}  // namespace

Vec riemann(const MetricModel& model, const Vec& x, const Vec& X, const Vec& Y, const Vec& Z) {
  const ChristoffelSymbols G = christoffel(model, x);
  const Vec dX = directional_gamma(model, x, X, Y, Z);
  const Vec dY = directional_gamma(model, x, Y, X, Z);
  return (dX - dY) + (G.contract(X, G.contract(Y, Z)) - G.contract(Y, G.contract(X, Z)));
}

double sectional_curvature(const MetricModel& model, const Vec& x, const Vec& X, const Vec& Y,
                           double tol) {
  const Mat g = model.metric(x);
  const double xx = X.dot(g * X);
  const double yy = Y.dot(g * Y);
  const double xy = X.dot(g * Y);
  const double gram = xx * yy - xy * xy;
  if (!(gram > tol * xx * yy) || !(xx > 0.0) || !(yy > 0.0))
    fail(ErrorKind::DegeneratePlane, "tangent vectors do not span a plane");
  const Vec r = riemann(model, x, X, Y, Y);
  return r.dot(g * X) / gram;
}

}  // namespace curvrad
