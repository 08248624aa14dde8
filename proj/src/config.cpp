#include "curvrad/config.hpp"

#include <cmath>

#include "curvrad/errors.hpp"
#include "curvrad/model_spec.hpp"

namespace curvrad {
namespace {

void require_positive(const char* field, double value) {
  if (!(std::isfinite(value) && value > 0.0))
    fail(ErrorKind::Config,
         std::string("field '") + field + "' must be a positive finite number, got " +
             std::to_string(value));
}

}  // namespace

void validate(const RunConfig& cfg) {
  require_positive("fd_step", cfg.fd_step);
  require_positive("rk_step", cfg.rk_step);
  require_positive("rank_tol", cfg.rank_tol);
  require_positive("constraint_tol", cfg.constraint_tol);
  if (cfg.rank_tol >= 1.0) fail(ErrorKind::Config, "field 'rank_tol' must be below 1");
  try {
    parse_model(cfg.model, cfg.fd_step);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Config) throw;
    fail(ErrorKind::Config, std::string("field 'model' is not usable: ") + e.what());
  }
}

MetricModel build_model(const RunConfig& cfg) { return parse_model(cfg.model, cfg.fd_step); }

}  // namespace curvrad
