#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "curvrad/curvature_lift.hpp"
#include "curvrad/errors.hpp"
#include "curvrad/radius_point.hpp"

using namespace curvrad;

namespace {

constexpr double kPi = std::numbers::pi;

SampledCurve sample(const std::function<Vec(double)>& c, double t0, double t1, int K) {
  std::vector<double> t(K);
  Mat pts(K, c(t0).size());
  for (int k = 0; k < K; ++k) {
    t[k] = t0 + (t1 - t0) * k / (K - 1);
    pts.row(k) = c(t[k]).transpose();
  }
  return SampledCurve(t, pts);
}

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST(GeodesicCurvature, Circles) {
  const auto unit = sample([](double t) { return v2(std::cos(t), std::sin(t)); }, 0, 2, 201);
  for (int k = 2; k < unit.size() - 2; ++k)
    EXPECT_NEAR(geodesic_curvature(euclidean(2), unit, k), 1.0, 1e-8);
  // Radius 2, non-uniform speed.
  const auto two = sample(
      [](double t) { return v2(2 * std::cos(t * t + t), 2 * std::sin(t * t + t)); }, 0, 1, 401);
  for (int k = 2; k < two.size() - 2; ++k)
    EXPECT_NEAR(geodesic_curvature(euclidean(2), two, k), 0.5, 1e-6);
}

TEST(GeodesicCurvature, SphereLatitude) {
  // Colatitude π/4: κ_g = cot(π/4) = 1.
  const auto lat = sample([](double t) { return v2(kPi / 4, t); }, 0, 3, 301);
  for (int k = 0; k < lat.size(); ++k)
    EXPECT_NEAR(geodesic_curvature(sphere2(), lat, k), 1.0, 1e-8);
}

TEST(GeodesicCurvature, DegenerateSpeed) {
  const auto still = sample([](double) { return v2(1.0, 2.0); }, 0, 1, 11);
  try {
    geodesic_curvature(euclidean(2), still, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateSpeed);
  }
}

TEST(CurvatureRadius, PointsToCenter) {
  const double r = 3.0;
  const auto c = sample([&](double t) { return v2(r * std::cos(t), r * std::sin(t)); }, -1, 1, 201);
  const Vec R = curvature_radius(euclidean(2), c, 100);  // t = 0, point (r, 0)
  EXPECT_NEAR(R[0], -r, 1e-8);
  EXPECT_NEAR(R[1], 0.0, 1e-8);

  const auto c3 = sample(
      [](double t) {
        Vec v(3);
        v << std::cos(t), std::sin(t), 0.0;
        return v;
      },
      0, 2, 201);
  // Interior samples; the one-sided endpoint stencils are only second order.
  for (int k = 20; k < c3.size() - 1; k += 20) {
    const double t = c3.times()[k];
    const Vec R3 = curvature_radius(euclidean(3), c3, k);
    EXPECT_NEAR(R3[0], -std::cos(t), 1e-6);
    EXPECT_NEAR(R3[1], -std::sin(t), 1e-6);
    EXPECT_NEAR(R3[2], 0.0, 1e-12);
  }
}

TEST(CurvatureRadius, StraightLineHasNoRadius) {
  const auto line = sample([](double t) { return v2(t, 2 * t); }, 0, 1, 11);
  try {
    curvature_radius(euclidean(2), line, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::KappaVanishes);
  }
  try {
    lift(euclidean(2), line, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::KappaVanishes);
    ASSERT_TRUE(e.sample().has_value());
  }
}

TEST(Lift, UnitCircleAtStart) {
  const auto c = sample([](double t) { return v2(std::cos(t), std::sin(t)); }, -1, 1, 201);
  const LiftedCurve L = lift(euclidean(2), c, +1);
  const RadiusPoint& q = L.states[100];
  EXPECT_NEAR(q.V[0], 0.0, 1e-8);
  EXPECT_NEAR(q.V[1], 1.0, 1e-8);
  EXPECT_NEAR(q.R[0], -1.0, 1e-8);
  EXPECT_NEAR(q.R[1], 0.0, 1e-8);
  const LiftedCurve M = lift(euclidean(2), c, -1);
  EXPECT_NEAR(M.states[100].V[1], -1.0, 1e-8);
  EXPECT_EQ(M.sign, -1);
}

TEST(Lift, InvariantsAndRadiusTimesKappa) {
  const auto lat = sample([](double t) { return v2(kPi / 4, t); }, 0, 3, 301);
  const LiftedCurve L = lift(sphere2(), lat, 1);
  for (int k = 0; k < L.size(); ++k) {
    const auto& q = L.states[k];
    const auto res = constraint_residual(sphere2(), q);
    EXPECT_LT(res.max(), 1e-10);
    EXPECT_NEAR(res.radius, 1.0, 1e-8);
    EXPECT_NEAR(res.radius * L.kappa[k], 1.0, 1e-12);
  }
}

TEST(Lift, ParametrizationInvariance) {
  // Same circle at speed 1 and speed 3; compare states at matching points.
  const int K = 601;
  const auto slow = sample([](double t) { return v2(std::cos(t), std::sin(t)); }, 0, 3, K);
  const auto fast = sample([](double t) { return v2(std::cos(3 * t), std::sin(3 * t)); }, 0, 1, K);
  const LiftedCurve a = lift(euclidean(2), slow, 1);
  const LiftedCurve b = lift(euclidean(2), fast, 1);
  for (int k = 2; k < K - 2; ++k) {
    EXPECT_LT((a.states[k].x - b.states[k].x).norm(), 1e-12);
    EXPECT_LT((a.states[k].V - b.states[k].V).norm(), 1e-7);
    EXPECT_LT((a.states[k].R - b.states[k].R).norm(), 1e-7);
  }
}

TEST(HomothetyInvariance, Examples) {
  const auto c = sample([](double t) { return v2(std::cos(t), std::sin(t)); }, 0, 3, 201);
  EXPECT_LE(homothety_invariance_check(euclidean(2), c, 4.0), 1e-8);
  EXPECT_EQ(homothety_invariance_check(euclidean(2), c, 1.0), 0.0);
  const auto h = sample([](double t) { return v2(t, 1.0 + 0.2 * t * t); }, -1, 1, 201);
  EXPECT_LE(homothety_invariance_check(hyperbolic2(), h, 2.0), 1e-6);
}
