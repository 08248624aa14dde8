#include "curvrad/errors.hpp"

namespace curvrad {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::SingularMetric: return "SingularMetric";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::DegeneratePlane: return "DegeneratePlane";
    case ErrorKind::LeftChart: return "LeftChart";
    case ErrorKind::DegenerateSpeed: return "DegenerateSpeed";
    case ErrorKind::KappaVanishes: return "KappaVanishes";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::IllConditionedBasis: return "IllConditionedBasis";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::Profile: return "ProfileError";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::ZeroRadius: return "ZeroRadius";
    case ErrorKind::UndefinedAngle: return "UndefinedAngle";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::Config: return "ConfigError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {
std::string decorate(ErrorKind kind, const std::string& what, std::optional<std::size_t> sample) {
  std::string msg(to_string(kind));
  msg += ": ";
  msg += what;
  if (sample) msg += " (sample " + std::to_string(*sample) + ")";
  return msg;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> sample)
    : std::runtime_error(decorate(kind, what, sample)), kind_(kind), sample_(sample) {}

void fail(ErrorKind kind, const std::string& what, std::optional<std::size_t> sample) {
  throw Error(kind, what, sample);
}

}  // namespace curvrad
