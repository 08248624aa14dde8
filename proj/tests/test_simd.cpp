#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "curvrad/sim2.hpp"
#include "curvrad/simd/kernels.hpp"

using namespace curvrad;
using simd::Isa;
using simd::KernelTable;

namespace {

std::vector<double> random_series(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

const KernelTable& scalar() { return *simd::kernels_for(Isa::Scalar); }

}  // namespace

TEST(Simd, ScalarAlwaysAvailable) {
  const auto isas = simd::available_isas();
  ASSERT_FALSE(isas.empty());
  EXPECT_EQ(isas.front(), Isa::Scalar);
  EXPECT_NE(simd::kernels_for(Isa::Scalar), nullptr);
}

TEST(Simd, ElementwiseKernelsMatchScalarBitwise) {
  // Lengths straddle the vector width so tails are exercised.
  for (std::size_t n : {5u, 6u, 7u, 8u, 9u, 13u, 64u, 101u}) {
    const auto y = random_series(n, 11 + n);
    const auto x = random_series(n, 23 + n);
    const auto k1 = random_series(n, 1), k2 = random_series(n, 2), k3 = random_series(n, 3),
               k4 = random_series(n, 4);
    for (Isa isa : simd::available_isas()) {
      const KernelTable& k = *simd::kernels_for(isa);
      SCOPED_TRACE(std::string(simd::to_string(isa)) + " n=" + std::to_string(n));
      std::vector<double> ref(n, 0.0), got(n, 0.0);
      scalar().diff1_o4(y.data(), n, 7.0, ref.data());
      k.diff1_o4(y.data(), n, 7.0, got.data());
      EXPECT_TRUE(bitwise_equal(ref, got));
      scalar().diff2_o4(y.data(), n, 49.0, ref.data());
      k.diff2_o4(y.data(), n, 49.0, got.data());
      EXPECT_TRUE(bitwise_equal(ref, got));
      scalar().axpy(n, 0.3, x.data(), y.data(), ref.data());
      k.axpy(n, 0.3, x.data(), y.data(), got.data());
      EXPECT_TRUE(bitwise_equal(ref, got));
      scalar().rk4_combine(n, 0.01, y.data(), k1.data(), k2.data(), k3.data(), k4.data(), ref.data());
      k.rk4_combine(n, 0.01, y.data(), k1.data(), k2.data(), k3.data(), k4.data(), got.data());
      EXPECT_TRUE(bitwise_equal(ref, got));
    }
  }
}

TEST(Simd, TrapezoidAgreesAcrossIsas) {
  for (std::size_t n : {2u, 3u, 5u, 9u, 1000u}) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = 0.01 * static_cast<double>(i * i);
    const auto f = random_series(n, n);
    const double ref = scalar().trapezoid(t.data(), f.data(), n);
    for (Isa isa : simd::available_isas())
      EXPECT_NEAR(simd::kernels_for(isa)->trapezoid(t.data(), f.data(), n), ref,
                  1e-13 * (1.0 + std::abs(ref)));
  }
}

TEST(Simd, TrapezoidExactOnLinear) {
  std::vector<double> t{0.0, 0.5, 1.0, 2.0, 3.5, 4.0};
  std::vector<double> f;
  for (double x : t) f.push_back(2.0 * x + 1.0);
  for (Isa isa : simd::available_isas())
    EXPECT_NEAR(simd::kernels_for(isa)->trapezoid(t.data(), f.data(), t.size()), 20.0, 1e-13);
}

TEST(Simd, StencilsDifferentiatePolynomialsExactly) {
  // Fourth-order stencils are exact on quartics up to rounding.
  const std::size_t n = 21;
  const double h = 0.1;
  std::vector<double> y(n), d1(n, 0.0), d2(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = h * static_cast<double>(i);
    y[i] = x * x * x * x - 2 * x * x * x + x;
  }
  for (Isa isa : simd::available_isas()) {
    const KernelTable& k = *simd::kernels_for(isa);
    k.diff1_o4(y.data(), n, 1.0 / h, d1.data());
    k.diff2_o4(y.data(), n, 1.0 / (h * h), d2.data());
    for (std::size_t i = 2; i + 2 < n; ++i) {
      const double x = h * static_cast<double>(i);
      EXPECT_NEAR(d1[i], 4 * x * x * x - 6 * x * x + 1, 1e-10);
      EXPECT_NEAR(d2[i], 12 * x * x - 12 * x, 1e-9);
    }
  }
}

TEST(Simd, Sim2RhsMatchesScalarFormula) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> d(0.0, 1.0);
  const std::size_t lanes = 11;
  std::vector<CovectorState> states;
  for (std::size_t i = 0; i < lanes; ++i)
    states.push_back({d(rng), 0.3 * d(rng), d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)});
  std::vector<double> s(8 * lanes), ec(lanes), es(lanes), out(8 * lanes);
  for (std::size_t i = 0; i < lanes; ++i) {
    const auto a = states[i].to_array();
    for (std::size_t c = 0; c < 8; ++c) s[c * lanes + i] = a[c];
    ec[i] = std::exp(a[1]) * std::cos(a[0]);
    es[i] = std::exp(a[1]) * std::sin(a[0]);
  }
  std::vector<double> ref(8 * lanes);
  scalar().sim2_rhs(lanes, s.data(), ec.data(), es.data(), ref.data());
  for (std::size_t i = 0; i < lanes; ++i) {
    const auto expected = hamiltonian_rhs(states[i]).to_array();
    for (std::size_t c = 0; c < 8; ++c)
      EXPECT_NEAR(ref[c * lanes + i], expected[c], 1e-12 * (1.0 + std::abs(expected[c])));
  }
  for (Isa isa : simd::available_isas()) {
    simd::kernels_for(isa)->sim2_rhs(lanes, s.data(), ec.data(), es.data(), out.data());
    EXPECT_TRUE(bitwise_equal(ref, out)) << simd::to_string(isa);
  }
}

TEST(Simd, BatchedFlowIdenticalAcrossIsas) {
  std::vector<CovectorState> s0;
  for (int i = 0; i < 6; ++i)
    s0.push_back(normalize_level({0.1 * i, -0.2, 0.0, 0.5, 1.0, 0.3 * i, 0.7, -0.4 + 0.1 * i}));
  const auto ref = hamiltonian_flow_batch(s0, 0.5, 1e-3, 50, simd::kernels_for(Isa::Scalar));
  for (Isa isa : simd::available_isas()) {
    const auto got = hamiltonian_flow_batch(s0, 0.5, 1e-3, 50, simd::kernels_for(isa));
    for (std::size_t i = 0; i < s0.size(); ++i) {
      const auto a = ref[i].states.back().to_array();
      const auto b = got[i].states.back().to_array();
      EXPECT_EQ(std::memcmp(a.data(), b.data(), sizeof a), 0) << simd::to_string(isa);
    }
  }
}

TEST(Simd, BatchMatchesSingleFlow) {
  const CovectorState a = normalize_level({0.2, 0.1, 0.0, 0.0, 0.6, -0.3, 0.8, 0.1});
  const CovectorState b = normalize_level({-1.0, 0.0, 1.0, 2.0, 0.1, 0.9, -0.5, 0.4});
  const auto batch = hamiltonian_flow_batch({a, b}, 1.0, 1e-3, 100);
  const auto single = hamiltonian_flow(b, 1.0, 1e-3, 100);
  const auto x = batch[1].states.back().to_array();
  const auto y = single.states.back().to_array();
  for (std::size_t c = 0; c < 8; ++c) EXPECT_DOUBLE_EQ(x[c], y[c]);
}
