#include <gtest/gtest.h>

#include <limits>

#include "curvrad/acceptance.hpp"
#include "curvrad/config.hpp"
#include "curvrad/errors.hpp"

using namespace curvrad;

namespace {

std::string config_error(const RunConfig& cfg) {
  try {
    validate(cfg);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Config);
    return e.what();
  }
  return {};
}

}  // namespace

TEST(RunConfig, DefaultsAreValid) {
  EXPECT_NO_THROW(validate(RunConfig{}));
  const MetricModel m = build_model(RunConfig{});
  EXPECT_EQ(m.dim(), 2);
  EXPECT_DOUBLE_EQ(m.fd_step(), 1e-5);
}

TEST(RunConfig, RejectsBadFields) {
  RunConfig a;
  a.rk_step = -1.0;
  EXPECT_NE(config_error(a).find("rk_step"), std::string::npos);
  RunConfig b;
  b.fd_step = std::numeric_limits<double>::quiet_NaN();
  EXPECT_NE(config_error(b).find("fd_step"), std::string::npos);
  RunConfig c;
  c.rank_tol = 2.0;
  EXPECT_NE(config_error(c).find("rank_tol"), std::string::npos);
  RunConfig d;
  d.constraint_tol = 0.0;
  EXPECT_NE(config_error(d).find("constraint_tol"), std::string::npos);
  RunConfig e;
  e.model = "torus:2";
  EXPECT_FALSE(config_error(e).empty());
}

TEST(Acceptance, CriterionIsDeterministic) {
  const RunConfig cfg;
  const auto a = run_criterion(13, cfg);
  const auto b = run_criterion(13, cfg);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].measured, b.rows[i].measured);
  EXPECT_TRUE(a.passed());
}

TEST(Acceptance, ReportTextOmitsTimings) {
  RunConfig cfg;
  const auto report = run_acceptance(cfg, {1, 13});
  ASSERT_EQ(report.criteria.size(), 2u);
  EXPECT_TRUE(report.passed());
  const std::string text = report.text();
  EXPECT_EQ(text.find("runtime"), std::string::npos);
  EXPECT_NE(text.find("overall: pass"), std::string::npos);
  EXPECT_EQ(text, run_acceptance(cfg, {1, 13}).text());
}

TEST(Acceptance, UnknownCriterion) {
  EXPECT_THROW(run_criterion(0, RunConfig{}), Error);
  EXPECT_THROW(run_criterion(kCriterionCount + 1, RunConfig{}), Error);
}
