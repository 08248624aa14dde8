#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "curvrad/controls.hpp"
#include "curvrad/errors.hpp"
#include "curvrad/frame_flow.hpp"
#include "curvrad/profile.hpp"
#include "curvrad/sampling.hpp"

using namespace curvrad;

namespace {

Vec vec(std::initializer_list<double> v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

// Integral curve of f_i from q over [0, T] on flat ℝ², recorded at every
// step so the second-order endpoint stencils stay below the tolerances.
ControlTrajectory frame_curve(int i, const RadiusPoint& q, double T) {
  FlowOptions opts;
  opts.step = 1e-3;
  opts.record_every = 1;
  const FlowResult res = flow(euclidean(2), FieldSpec({i}), q, T, opts);
  return controls_from_path(euclidean(2), res.times, res.states);
}

constexpr double kPi = std::numbers::pi;

const RadiusPoint kUnit{vec({0.2, -0.1}), vec({0, 1}), vec({1, 0})};

}  // namespace

TEST(Controls, FrameIntegralCurves) {
  const ControlTrajectory a = frame_curve(1, kUnit, 1.0);
  const ControlTrajectory b = frame_curve(2, kUnit, 1.0);
  for (int k = 0; k < a.size(); ++k) {
    EXPECT_NEAR(a.controls(k, 0), 1.0, 1e-6);
    EXPECT_NEAR(a.controls(k, 1), 0.0, 1e-6);
    EXPECT_NEAR(b.controls(k, 0), 0.0, 1e-6);
    EXPECT_NEAR(b.controls(k, 1), 1.0, 1e-6);
  }
  EXPECT_LE(a.max_residual, 1e-4);
}

TEST(Controls, CircleLift) {
  // Arc-length circle of radius r, lifted: u₁ = 1/r, u₂ = d/dt log|R| = 0.
  const double r = 2.0;
  const int K = 401;
  std::vector<double> t(K);
  Mat pts(K, 2);
  for (int k = 0; k < K; ++k) {
    t[k] = 0.01 * k;
    pts.row(k) << r * std::cos(t[k] / r), r * std::sin(t[k] / r);
  }
  const LiftedCurve L = lift(euclidean(2), SampledCurve(t, pts), 1);
  const ControlTrajectory c = controls_from_path(euclidean(2), L);
  for (int k = 0; k < K; ++k) {
    // The lift is differentiated twice; one-sided stencils near the ends
    // lose two orders.
    const bool interior = k >= 4 && k < K - 4;
    EXPECT_NEAR(c.controls(k, 0), 1.0 / r, interior ? 1e-6 : 2e-3);
    EXPECT_NEAR(c.controls(k, 1), 0.0, interior ? 1e-6 : 2e-3);
    EXPECT_NEAR(c.radius[k], r, interior ? 1e-7 : 1e-4);
  }
}

TEST(Controls, RejectsNonAdmissiblePath) {
  // Base point moving along R is not in the distribution.
  std::vector<double> t;
  std::vector<RadiusPoint> states;
  for (int k = 0; k < 11; ++k) {
    t.push_back(0.1 * k);
    states.push_back({vec({0.1 * k, 0.0}), vec({0, 1}), vec({1, 0})});
  }
  try {
    controls_from_path(euclidean(2), t, states);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAdmissible);
    EXPECT_TRUE(e.sample().has_value());
  }
}

TEST(Length, ConstantAndRadialProfilesOnF1) {
  const double T = 1.5;
  const ControlTrajectory c = frame_curve(1, kUnit, T);
  EXPECT_NEAR(length(MetricProfile::constant(0.6, 0.8), c), T, 1e-9);
  EXPECT_NEAR(length(MetricProfile::constant(3.0, 4.0), c), 5.0 * T, 1e-8);
  EXPECT_NEAR(length(MetricProfile::radial("0", "1"), c), T, 1e-9);
}

TEST(Length, ZeroDuration) {
  const ControlTrajectory c = controls_from_path(euclidean(2), {0.0}, {kUnit});
  EXPECT_EQ(length(MetricProfile::constant(1, 1), c), 0.0);
}

TEST(Length, ConstantEqualsRescaledRadial) {
  Rng rng(41);
  const ControlTrajectory c =
      frame_curve(1, random_radius_point(euclidean(2), rng), 0.8);
  const ControlTrajectory d =
      frame_curve(2, random_radius_point(euclidean(2), rng), 0.8);
  for (const auto* traj : {&c, &d}) {
    const double a = length(MetricProfile::constant(0.3, 1.7), *traj);
    const double b = length(MetricProfile::radial("0.3/r", "1.7/r"), *traj);
    EXPECT_NEAR(a, b, 1e-10);
  }
}

TEST(Length, SimilarityInvariance) {
  Rng rng(42);
  FlowOptions opts;
  opts.record_every = 10;
  const RadiusPoint q = random_radius_point(euclidean(2), rng);
  // An f1 segment followed by an f2 segment.
  std::vector<double> t;
  std::vector<RadiusPoint> states;
  RadiusPoint cur = q;
  double t0 = 0.0;
  for (int seg = 0; seg < 2; ++seg) {
    const FlowResult r = flow(euclidean(2), FieldSpec({seg == 0 ? 1 : 2}), cur, 0.5, opts);
    for (std::size_t k = seg == 0 ? 0 : 1; k < r.states.size(); ++k) {
      t.push_back(t0 + r.times[k]);
      states.push_back(r.states[k]);
    }
    cur = r.final_state();
    t0 += 0.5;
  }
  // The velocity jumps at the junction, so each smooth piece is measured on its own.
  const MetricProfile p = MetricProfile::constant(0.5, 2.0);
  const double s = 3.0, ang = 1.1;
  Mat A(2, 2);
  A << std::cos(ang), -std::sin(ang), std::sin(ang), std::cos(ang);
  const Vec b = vec({4.0, -1.0});
  std::vector<RadiusPoint> moved;
  for (const auto& st : states) moved.push_back({s * A * st.x + b, s * A * st.V, s * A * st.R});
  const std::size_t half = states.size() / 2 + 1;
  for (auto [lo, hi] : {std::pair<std::size_t, std::size_t>{0, half}, {half - 1, states.size()}}) {
    std::vector<double> tt(t.begin() + lo, t.begin() + hi);
    std::vector<RadiusPoint> s0(states.begin() + lo, states.begin() + hi);
    std::vector<RadiusPoint> s1(moved.begin() + lo, moved.begin() + hi);
    const double l0 = length(p, controls_from_path(euclidean(2), tt, s0));
    const double l1 = length(p, controls_from_path(euclidean(2), tt, s1));
    EXPECT_NEAR(l1 / l0, 1.0, 1e-6);
  }
}

TEST(LowerBound, EqualityOnF1) {
  const ControlTrajectory c = frame_curve(1, kUnit, 1.0);
  const LowerBound lb = lower_bound_check(euclidean(2), MetricProfile::radial("0", "1"), c);
  EXPECT_NEAR(lb.length, lb.speed_bound, 1e-12);
  EXPECT_GE(lb.slack, -1e-9);
  // Chord of a unit circle arc of angle 1.
  EXPECT_NEAR(lb.distance, 2 * std::sin(0.5), 1e-9);
  for (int k = 0; k < c.size(); ++k) EXPECT_GE(c.radial_rate[k], c.speed[k] - 1e-9);
}

TEST(LowerBound, CircleArcBetweenUnitChord) {
  // κ = 0.1 arc from (0,0) to (1,0): chord 1 and arc length 2·10·asin(1/20).
  const double kappa = 0.1, r = 1.0 / kappa;
  const double half = std::asin(0.5 * kappa);
  const double L = 2 * r * half;
  const int K = 401;
  std::vector<double> t(K);
  Mat pts(K, 2);
  for (int k = 0; k < K; ++k) {
    t[k] = L * k / (K - 1);
    const double a = -kPi / 2 - half + t[k] / r;  // angle around the center (0.5, r cos half)
    pts.row(k) << 0.5 + r * std::cos(a), r * std::cos(half) + r * std::sin(a);
  }
  const LiftedCurve lifted = lift(euclidean(2), SampledCurve(t, pts), 1);
  const ControlTrajectory c = controls_from_path(euclidean(2), lifted);
  const LowerBound lb = lower_bound_check(euclidean(2), MetricProfile::radial("0", "1"), c);
  EXPECT_GE(lb.length, 1.0);
  EXPECT_NEAR(lb.length, L, 1e-6);
  EXPECT_NEAR(lb.distance, 1.0, 1e-6);
  EXPECT_GE(lb.slack, -1e-9);
}

TEST(LowerBound, RequiresUnitProfile) {
  const ControlTrajectory c = frame_curve(1, kUnit, 0.5);
  try {
    lower_bound_check(euclidean(2), MetricProfile::constant(0.1, 0.2), c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Profile);
  }
}

TEST(Profile, Parse) {
  const MetricProfile c = MetricProfile::parse("const:a=0,b=1");
  EXPECT_TRUE(c.is_constant());
  EXPECT_DOUBLE_EQ(c.b_at(2.0), 0.5);
  const MetricProfile r = MetricProfile::parse("radial:a=0,b=1+1/r");
  EXPECT_FALSE(r.is_constant());
  EXPECT_DOUBLE_EQ(r.b_at(2.0), 1.5);
  EXPECT_THROW(MetricProfile::constant(1.0, 0.0), Error);
  for (const char* bad : {"const:a=0", "linear:a=0,b=1", "const:a=x,b=1", "radial:a=0,b=(r"}) {
    try {
      MetricProfile::parse(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Config) << bad;
    }
  }
  try {
    MetricProfile::parse("radial:a=0,b=r-1").b_at(0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Profile);
  }
}
