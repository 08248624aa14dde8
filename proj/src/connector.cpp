#include "curvrad/connector.hpp"

#include <cmath>
#include <numbers>

#include "curvrad/connection.hpp"
#include "curvrad/errors.hpp"
#include "curvrad/geodesic.hpp"
#include "curvrad/integrator.hpp"

namespace curvrad {

Vec direction_from_angles(const Vec& angles) {
  const int n = static_cast<int>(angles.size()) + 1;
  Vec s(n - 1);
  double prod = 1.0;
  for (int k = 0; k < n - 2; ++k) {
    s[k] = prod * std::cos(angles[k]);
    prod *= std::sin(angles[k]);
  }
  s[n - 2] = prod;
  const double last = angles[n - 2];
  Vec X(n);
  X.head(n - 1) = std::cos(last) * s;
  X[n - 1] = std::sin(last);
  return X;
}

Vec angles_from_direction(const Vec& unit) {
  const int n = static_cast<int>(unit.size());
  Vec angles(n - 1);
  if (n == 2) {
    angles[0] = std::atan2(unit[1], unit[0]);
    return angles;
  }
  const Vec head = unit.head(n - 1);
  angles[n - 2] = std::atan2(unit[n - 1], head.norm());
  for (int k = 0; k < n - 2; ++k) {
    const double tail = head.tail(n - 2 - k).norm();
    angles[k] = std::atan2(tail, head[k]);
  }
  // Last hyperspherical angle carries the sign of the final component.
  if (n >= 3 && head[n - 2] < 0.0) angles[n - 3] = 2.0 * std::numbers::pi - angles[n - 3];
  return angles;
}

namespace {

struct Trial {
  Mat points;         // (N+1) × n
  Mat velocities;     // γ̇
  Mat accelerations;  // γ̈
  Mat normals;        // Σ X^j(θ + π/2) e_j, unit
};

class ConnectorOde {
 public:
  ConnectorOde(const MetricModel& model, const Vec& x0, double kappa)
      : model_(model), x0_(x0), kappa_(kappa), n_(model.dim()) {
    const Mat g = model.metric(x0);
    Eigen::LLT<Mat> llt(g);
    if (llt.info() != Eigen::Success)
      fail(ErrorKind::SingularMetric, "metric of " + model.name() + " is not positive definite");
    frame0_ = Mat(llt.matrixU()).triangularView<Eigen::Upper>().solve(Mat::Identity(n_, n_));
  }

  // Orthonormal-frame components of a tangent vector at x0.
  Vec components(const Vec& v) const {
    return frame0_.triangularView<Eigen::Upper>().solve(v);
  }

  Vec endpoint(const Vec& angles, double T, int steps) const {
    return integrate(angles, T, steps, nullptr);
  }

  Trial trial(const Vec& angles, double T, int steps) const {
    Trial out;
    integrate(angles, T, steps, &out);
    return out;
  }

 private:
  Vec turned(const Vec& angles, double t, double extra) const {
    Vec a = angles;
    a[n_ - 2] += kappa_ * t + extra;
    return direction_from_angles(a);
  }

  Vec integrate(const Vec& angles, double T, int steps, Trial* rec) const {
    const int n = n_;
    // State: [γ, e₁…eₙ (column-major), t].
    Vec y(n + n * n + 1);
    y.head(n) = x0_;
    for (int j = 0; j < n; ++j) y.segment(n + j * n, n) = frame0_.col(j);
    y[n + n * n] = 0.0;

    auto rhs = [&](const Vec& s) -> Vec {
      const Vec x = s.head(n);
      if (!model_.in_domain(x))
        fail(ErrorKind::LeftChart, "connector left the chart of " + model_.name());
      const ChristoffelSymbols G = christoffel(model_, x);
      const Vec X = turned(angles, s[n + n * n], 0.0);
      Vec v = Vec::Zero(n);
      for (int j = 0; j < n; ++j) v += X[j] * s.segment(n + j * n, n);
      Vec d(s.size());
      d.head(n) = v;
      for (int j = 0; j < n; ++j) d.segment(n + j * n, n) = -G.contract(v, s.segment(n + j * n, n));
      d[n + n * n] = 1.0;
      return d;
    };

    auto record = [&](int k, const Vec& s) {
      const Vec x = s.head(n);
      const double t = s[n + n * n];
      const Vec X = turned(angles, t, 0.0);
      const Vec Xp = turned(angles, t, std::numbers::pi / 2.0);
      Vec v = Vec::Zero(n), nrm = Vec::Zero(n);
      for (int j = 0; j < n; ++j) {
        v += X[j] * s.segment(n + j * n, n);
        nrm += Xp[j] * s.segment(n + j * n, n);
      }
      rec->points.row(k) = x.transpose();
      rec->velocities.row(k) = v.transpose();
      rec->normals.row(k) = nrm.transpose();
      const Vec acc = kappa_ * nrm - gamma_contract(model_, x, v, v);
      rec->accelerations.row(k) = acc.transpose();
    };

    const double h = T / steps;
    if (rec) {
      rec->points.resize(steps + 1, n);
      rec->velocities.resize(steps + 1, n);
      rec->accelerations.resize(steps + 1, n);
      rec->normals.resize(steps + 1, n);
      record(0, y);
    }
    for (int k = 1; k <= steps; ++k) {
      y = rk4_step(rhs, y, h);
      if (!model_.in_domain(y.head(n)))
        fail(ErrorKind::LeftChart, "connector left the chart of " + model_.name());
      if (rec) record(k, y);
    }
    return y.head(n);
  }

  const MetricModel& model_;
  Vec x0_;
  double kappa_;
  int n_;
  Mat frame0_;  // columns: g-orthonormal frame at x0 (upper triangular)
};

}  // namespace

Connector constant_curvature_connect(const ShootingProblem& prob, const ConnectorOptions& opts) {
  const MetricModel& model = prob.model;
  const int n = model.dim();
  if (n < 2) fail(ErrorKind::InvalidArgument, "connector needs dimension at least 2");
  if (!(prob.kappa >= 0.0)) fail(ErrorKind::InvalidArgument, "kappa must be non-negative");
  if (opts.steps < 4) fail(ErrorKind::InvalidArgument, "connector needs at least 4 steps");
  model.require_domain(prob.x0);
  model.require_domain(prob.x1);
  if ((prob.x1 - prob.x0).norm() == 0.0)
    fail(ErrorKind::InvalidArgument, "connector endpoints coincide");

  const ConnectorOde ode(model, prob.x0, prob.kappa);

  const Vec v = log_map(model, prob.x0, prob.x1, opts.geodesic_step);
  const Vec c = ode.components(v);
  const double dist = c.norm();
  if (prob.kappa * dist > 2.0)
    fail(ErrorKind::Unreachable, "kappa * distance = " + std::to_string(prob.kappa * dist) +
                                     " exceeds 2; no arc of that curvature joins the points");

  Vec angles;
  double T = 0.0;
  if (opts.initial_angles && opts.initial_duration) {
    angles = *opts.initial_angles;
    T = *opts.initial_duration;
  } else {
    angles = angles_from_direction(c / dist);
    // Start the arc rotated back by half its total turning so it bows
    // symmetrically about the chord.
    angles[n - 2] -= 0.5 * prob.kappa * dist;
    T = prob.kappa > 0.0 ? 2.0 * std::asin(0.5 * prob.kappa * dist) / prob.kappa : dist;
  }
  if (static_cast<int>(angles.size()) != n - 1)
    fail(ErrorKind::InvalidArgument, "initial angles must have n-1 entries");

  auto residual = [&](const Vec& p) -> Vec {
    return ode.endpoint(p.head(n - 1), p[n - 1], opts.steps) - prob.x1;
  };

  Vec p(n);
  p << angles, T;
  Vec r = residual(p);
  int it = 0;
  for (; it < opts.max_iter && r.norm() > opts.tol; ++it) {
    Mat J(n, n);
    for (int j = 0; j < n; ++j) {
      const double h = 1e-7 * std::max(1.0, std::abs(p[j]));
      Vec pp = p, pm = p;
      pp[j] += h;
      pm[j] -= h;
      J.col(j) = (residual(pp) - residual(pm)) / (2.0 * h);
    }
    const Vec delta = J.colPivHouseholderQr().solve(-r);
    double lambda = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 30; ++halving) {
      Vec trial = p + lambda * delta;
      if (trial[n - 1] > 0.0) {
        try {
          const Vec rt = residual(trial);
          if (rt.norm() < r.norm()) {
            p = trial;
            r = rt;
            improved = true;
            break;
          }
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::LeftChart) throw;
        }
      }
      lambda *= 0.5;
    }
    if (!improved) break;
    if (p[n - 1] > prob.max_length)
      fail(ErrorKind::NoConvergence, "connector length exceeds the budget");
  }
  if (!(r.norm() <= opts.tol))
    fail(ErrorKind::NoConvergence, "connector shooting stalled at endpoint error " +
                                       std::to_string(r.norm()) + " after " +
                                       std::to_string(it) + " iterations");

  angles = p.head(n - 1);
  T = p[n - 1];
  const Trial tr = ode.trial(angles, T, opts.steps);
  std::vector<double> times(static_cast<std::size_t>(opts.steps + 1));
  for (int k = 0; k <= opts.steps; ++k) times[static_cast<std::size_t>(k)] = T * k / opts.steps;
  times.back() = T;

  Connector out{SampledCurve(times, tr.points, tr.velocities, tr.accelerations),
                std::nullopt,
                Mat(),
                angles,
                T,
                it,
                r.norm()};

  if (prob.kappa > 0.0) {
    const double radius = 1.0 / prob.kappa;
    LiftedCurve lifted;
    lifted.sign = 1;
    lifted.times = times;
    out.state_velocities.resize(opts.steps + 1, 3 * n);
    for (int k = 0; k <= opts.steps; ++k) {
      const Vec x = tr.points.row(k).transpose();
      const Vec v = tr.velocities.row(k).transpose();
      const Vec R = radius * tr.normals.row(k).transpose();
      const Vec V = radius * v;
      lifted.states.push_back(RadiusPoint{x, V, R});
      lifted.kappa.push_back(prob.kappa);
      const ChristoffelSymbols G = christoffel(model, x);
      // D_tR = −γ̇ and D_tV = κR along the arc.
      out.state_velocities.block(k, 0, 1, n) = v.transpose();
      out.state_velocities.block(k, n, 1, n) = (-v - G.contract(v, R)).transpose();
      out.state_velocities.block(k, 2 * n, 1, n) =
          (prob.kappa * R - G.contract(v, V)).transpose();
    }
    out.lift = std::move(lifted);
  }
  return out;
}

}  // namespace curvrad
