#include "curvrad/sim2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "curvrad/errors.hpp"
#include "curvrad/finite_difference.hpp"

namespace curvrad {

double CircleCoords::rho() const { return std::log(r); }

CircleCoords to_circle_coords(const Vec2& y, const Vec2& R) {
  const double r = R.norm();
  if (!(r > 0.0)) fail(ErrorKind::ZeroRadius, "circle coordinates need R != 0");
  CircleCoords c;
  c.r = r;
  c.theta = std::atan2(-R[1], -R[0]);
  c.x1 = y[0] + R[0];
  c.x2 = y[1] + R[1];
  return c;
}

std::pair<Vec2, Vec2> from_circle_coords(const CircleCoords& c) {
  if (!(c.r > 0.0)) fail(ErrorKind::ZeroRadius, "circle coordinates need r > 0");
  const Vec2 u(std::cos(c.theta), std::sin(c.theta));
  return {Vec2(c.x1, c.x2) + c.r * u, -c.r * u};
}

Mat3 embed_group(const CircleCoords& c) {
  if (!(c.r > 0.0)) fail(ErrorKind::ZeroRadius, "group embedding needs r > 0");
  const double a = c.r * std::cos(c.theta);
  const double b = c.r * std::sin(c.theta);
  Mat3 Q;
  Q << a, -b, c.x1, b, a, c.x2, 0.0, 0.0, 1.0;
  return Q;
}

CircleCoords circle_coords_from_group(const Mat3& Q) {
  CircleCoords c;
  c.r = std::hypot(Q(0, 0), Q(1, 0));
  if (!(c.r > 0.0)) fail(ErrorKind::ZeroRadius, "group element has zero scale");
  c.theta = std::atan2(Q(1, 0), Q(0, 0));
  c.x1 = Q(0, 2);
  c.x2 = Q(1, 2);
  return c;
}

double group_form_residual(const Mat3& Q) {
  const double bottom = std::max({std::abs(Q(2, 0)), std::abs(Q(2, 1)), std::abs(Q(2, 2) - 1.0)});
  const double block = std::max(std::abs(Q(0, 0) - Q(1, 1)), std::abs(Q(0, 1) + Q(1, 0)));
  return std::max(bottom, block);
}

Mat3 generator_e1() {
  Mat3 E;
  E << 0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0;
  return E;
}

Mat3 generator_e2() {
  Mat3 E;
  E << 1.0, 0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0;
  return E;
}

LeftInvariantFrame left_invariant_frame(const Mat3& Q) {
  return {-Q * generator_e1(), Q * generator_e2()};
}

namespace {

using Vec4 = Eigen::Vector4d;

// Surface frame on flat ℝ² in coordinates (y, R).
std::array<Vec4, 2> surface_frame(const Vec2& R) {
  const Vec2 V(-R[1], R[0]);
  Vec4 f1, f2;
  f1 << V, -V;
  f2 << 0.0, 0.0, R;
  return {f1, f2};
}

constexpr double kStep = 1e-3;

template <class Map>
auto derivative_along(Map&& map, const Vec4& p, const Vec4& v) {
  const auto a = map(p - 2.0 * kStep * v);
  const auto b = map(p - kStep * v);
  const auto c = map(p + kStep * v);
  const auto d = map(p + 2.0 * kStep * v);
  return decltype(a)(((a - d) + 8.0 * (c - b)) / (12.0 * kStep));
}

double wrap_angle(double a) {
  return std::remainder(a, 2.0 * std::numbers::pi);
}

}  // namespace

double frame_pushforward_residual(const Vec2& y, const Vec2& R) {
  Vec4 p;
  p << y, R;
  auto Qmap = [](const Vec4& z) -> Mat3 {
    return embed_group(to_circle_coords(z.head<2>(), z.tail<2>()));
  };
  const Mat3 Q = Qmap(p);
  const auto frame = surface_frame(R);
  const LeftInvariantFrame expected = left_invariant_frame(Q);
  const Mat3 d1 = derivative_along(Qmap, p, frame[0]);
  const Mat3 d2 = derivative_along(Qmap, p, frame[1]);
  return std::max((d1 - expected.f1).cwiseAbs().maxCoeff(),
                  (d2 - expected.f2).cwiseAbs().maxCoeff());
}

Eigen::Matrix<double, 4, 2> circle_frame(const CircleCoords& c) {
  const auto [y, R] = from_circle_coords(c);
  Vec4 p;
  p << y, R;
  // Angles are measured relative to θ at p so the map stays continuous.
  auto coords = [theta0 = c.theta](const Vec4& z) -> Vec4 {
    const CircleCoords cc = to_circle_coords(z.head<2>(), z.tail<2>());
    Vec4 out;
    out << wrap_angle(cc.theta - theta0), cc.r, cc.x1, cc.x2;
    return out;
  };
  const auto frame = surface_frame(R);
  Eigen::Matrix<double, 4, 2> out;
  out.col(0) = derivative_along(coords, p, frame[0]);
  out.col(1) = derivative_along(coords, p, frame[1]);
  return out;
}

SubmersionResidual submersion_residual(const CircleCoords& c) {
  const auto F = circle_frame(c);
  auto P = [](const Vec4& v) { return Eigen::Vector3d(v[0], v[2], v[3]); };
  const Eigen::Vector3d X1(0.0, std::cos(c.theta), std::sin(c.theta));
  const Eigen::Vector3d X2(1.0, 0.0, 0.0);
  const Vec4 f1 = F.col(0);
  const Vec4 f2 = F.col(1);
  SubmersionResidual out;
  out.holds = std::max((P(f2 / c.r) + X1).cwiseAbs().maxCoeff(), (P(f1) + X2).cwiseAbs().maxCoeff());
  out.swapped =
      std::max((P(f1 / c.r) + X1).cwiseAbs().maxCoeff(), (P(f2) - X2).cwiseAbs().maxCoeff());
  return out;
}

std::array<double, 8> CovectorState::to_array() const {
  return {theta, rho, x1, x2, p_theta, p_rho, p_x1, p_x2};
}

CovectorState CovectorState::from_array(const std::array<double, 8>& a) {
  return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]};
}

double hamiltonian(const CovectorState& s) {
  const double er = std::exp(s.rho);
  const double w = s.p_rho - er * std::cos(s.theta) * s.p_x1 - er * std::sin(s.theta) * s.p_x2;
  return 0.5 * (s.p_theta * s.p_theta + w * w);
}

CovectorState hamiltonian_rhs(const CovectorState& s) {
  const double er = std::exp(s.rho);
  const double c = er * std::cos(s.theta);
  const double sn = er * std::sin(s.theta);
  const double w = s.p_rho - c * s.p_x1 - sn * s.p_x2;
  CovectorState d;
  d.theta = s.p_theta;
  d.rho = w;
  d.x1 = -w * c;
  d.x2 = -w * sn;
  d.p_theta = -w * (sn * s.p_x1 - c * s.p_x2);
  d.p_rho = w * (c * s.p_x1 + sn * s.p_x2);
  d.p_x1 = 0.0;
  d.p_x2 = 0.0;
  return d;
}

FirstIntegrals first_integrals(const CovectorState& s) {
  FirstIntegrals out;
  out.epsilon = std::hypot(s.p_x1, s.p_x2);
  if (out.epsilon > 0.0) out.alpha = std::atan2(s.p_x2, s.p_x1);
  return out;
}

double first_integral_alpha(const CovectorState& s) {
  const auto fi = first_integrals(s);
  if (!fi.alpha) fail(ErrorKind::UndefinedAngle, "alpha is undefined when p_x1 = p_x2 = 0");
  return *fi.alpha;
}

CovectorState normalize_level(const CovectorState& s) {
  const double H = hamiltonian(s);
  if (!(H > 0.0)) fail(ErrorKind::InvalidArgument, "cannot normalize a covector with H = 0");
  const double k = 1.0 / std::sqrt(2.0 * H);
  CovectorState out = s;
  out.p_theta *= k;
  out.p_rho *= k;
  out.p_x1 *= k;
  out.p_x2 *= k;
  return out;
}

std::vector<Sim2Trajectory> hamiltonian_flow_batch(const std::vector<CovectorState>& s0, double T,
                                                   double step, int record_every,
                                                   const simd::KernelTable* kernels) {
  if (!(step > 0.0)) fail(ErrorKind::InvalidArgument, "flow step must be positive");
  if (!(T >= 0.0)) fail(ErrorKind::InvalidArgument, "flow duration must be non-negative");
  const auto& K = kernels ? *kernels : simd::kernels();
  const std::size_t L = s0.size();
  const std::size_t N = simd::kSim2Components * L;
  std::vector<Sim2Trajectory> out(L);
  if (L == 0) return out;

  std::vector<double> y(N), tmp(N), k1(N), k2(N), k3(N), k4(N), ec(L), es(L);
  for (std::size_t i = 0; i < L; ++i) {
    const auto a = s0[i].to_array();
    for (std::size_t c = 0; c < simd::kSim2Components; ++c) y[c * L + i] = a[c];
  }
  auto record = [&](double t) {
    for (std::size_t i = 0; i < L; ++i) {
      std::array<double, 8> a;
      for (std::size_t c = 0; c < simd::kSim2Components; ++c) a[c] = y[c * L + i];
      out[i].times.push_back(t);
      out[i].states.push_back(CovectorState::from_array(a));
    }
  };
  auto rhs = [&](const std::vector<double>& s, std::vector<double>& d) {
    for (std::size_t i = 0; i < L; ++i) {
      const double er = std::exp(s[L + i]);
      ec[i] = er * std::cos(s[i]);
      es[i] = er * std::sin(s[i]);
    }
    K.sim2_rhs(L, s.data(), ec.data(), es.data(), d.data());
  };

  record(0.0);
  const int steps = T == 0.0 ? 0 : static_cast<int>(std::ceil(T / step - 1e-9));
  const double h = steps > 0 ? T / steps : 0.0;
  const int every = std::max(1, record_every);
  for (int k = 1; k <= steps; ++k) {
    rhs(y, k1);
    K.axpy(N, 0.5 * h, k1.data(), y.data(), tmp.data());
    rhs(tmp, k2);
    K.axpy(N, 0.5 * h, k2.data(), y.data(), tmp.data());
    rhs(tmp, k3);
    K.axpy(N, h, k3.data(), y.data(), tmp.data());
    rhs(tmp, k4);
    K.rk4_combine(N, h, y.data(), k1.data(), k2.data(), k3.data(), k4.data(), y.data());
    for (std::size_t j = 0; j < N; ++j) {
      if (!std::isfinite(y[j]))
        fail(ErrorKind::NonFinite, "Hamiltonian flow overflowed", static_cast<std::size_t>(k));
    }
    if (k % every == 0 || k == steps) record(k * h);
  }
  return out;
}

Sim2Trajectory hamiltonian_flow(const CovectorState& s0, double T, double step, int record_every,
                                const simd::KernelTable* kernels) {
  return std::move(hamiltonian_flow_batch({s0}, T, step, record_every, kernels).front());
}

ProjectedCurvature projected_curvature(const Sim2Trajectory& traj, double speed_tol) {
  const int n = static_cast<int>(traj.states.size());
  if (n < 5) fail(ErrorKind::InsufficientSamples, "projected curvature needs at least 5 samples");
  Mat pts(n, 2);
  for (int k = 0; k < n; ++k) {
    pts(k, 0) = traj.states[static_cast<std::size_t>(k)].theta;
    pts(k, 1) = traj.states[static_cast<std::size_t>(k)].rho;
  }
  const auto d = differentiate(traj.times, pts, 4);
  ProjectedCurvature out;
  out.kappa.resize(static_cast<std::size_t>(n));
  out.law.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double td = d.first(k, 0), rd = d.first(k, 1);
    const double tdd = d.second(k, 0), rdd = d.second(k, 1);
    const double speed = std::hypot(td, rd);
    if (!(speed > speed_tol))
      fail(ErrorKind::DegenerateSpeed, "(theta, rho) projection is not regular",
           static_cast<std::size_t>(k));
    const auto kk = static_cast<std::size_t>(k);
    out.kappa[kk] = (td * rdd - rd * tdd) / (speed * speed * speed);
    const CovectorState& s = traj.states[kk];
    const auto fi = first_integrals(s);
    const double H = hamiltonian(s);
    out.law[kk] = fi.alpha ? fi.epsilon * std::exp(s.rho) * std::sin(s.theta - *fi.alpha) /
                                 std::sqrt(2.0 * H)
                           : 0.0;
    if (k >= 2 && k < n - 2)
      out.residual = std::max(out.residual, std::abs(out.kappa[kk] - out.law[kk]));
  }
  return out;
}

double projected_curvature_residual(const Sim2Trajectory& traj) {
  return projected_curvature(traj).residual;
}

namespace {

struct Box {
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  void add(double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
};

std::string polyline(const std::vector<Vec2>& pts, double ox, double size, const char* color) {
  Box b;
  for (const auto& p : pts) b.add(p[0], p[1]);
  const double span = std::max({b.xmax - b.xmin, b.ymax - b.ymin, 1e-12});
  const double margin = 20.0;
  const double scale = (size - 2.0 * margin) / span;
  std::string s = "  <polyline fill=\"none\" stroke=\"";
  s += color;
  s += "\" stroke-width=\"1.5\" points=\"";
  char buf[64];
  for (const auto& p : pts) {
    const double px = ox + margin + (p[0] - b.xmin) * scale;
    const double py = size - margin - (p[1] - b.ymin) * scale;
    std::snprintf(buf, sizeof buf, "%.3f,%.3f ", px, py);
    s += buf;
  }
  s += "\"/>\n";
  return s;
}

}  // namespace

std::string trajectory_svg(const Sim2Trajectory& traj) {
  constexpr double kPanel = 400.0;
  std::vector<Vec2> proj, plane;
  for (const auto& s : traj.states) {
    proj.emplace_back(s.rho, s.theta);
    const double r = std::exp(s.rho);
    plane.emplace_back(s.x1 + r * std::cos(s.theta), s.x2 + r * std::sin(s.theta));
  }
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" "
      "viewBox=\"0 0 800 400\">\n"
      "  <rect width=\"800\" height=\"400\" fill=\"white\"/>\n"
      "  <line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"400\" stroke=\"#ccc\"/>\n"
      "  <text x=\"10\" y=\"16\" font-size=\"12\">(rho, theta) projection</text>\n"
      "  <text x=\"410\" y=\"16\" font-size=\"12\">planar trace</text>\n";
  svg += polyline(proj, 0.0, kPanel, "#1f77b4");
  svg += polyline(plane, kPanel, kPanel, "#d62728");
  svg += "</svg>\n";
  return svg;
}

}  // namespace curvrad
