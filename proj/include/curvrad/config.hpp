#pragma once

#include <cstdint>
#include <string>

#include "curvrad/metric_model.hpp"

namespace curvrad {

// Settings shared by every CLI subcommand. Identical configs give identical
// outputs: the seed drives the only random generator.
struct RunConfig {
  std::string model = "euclidean:2";
  double fd_step = 1e-5;
  double rk_step = 1e-3;
  double rank_tol = 1e-8;
  double constraint_tol = 1e-6;
  std::uint64_t seed = 20240917;
  std::string output;  // empty means stdout
};

// Throws Error(Config) naming the first offending field.
void validate(const RunConfig& cfg);

// The configured model with the configured finite-difference step.
MetricModel build_model(const RunConfig& cfg);

}  // namespace curvrad
