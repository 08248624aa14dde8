#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace curvrad {

enum class ErrorKind {
  Domain,
  SingularMetric,
  InsufficientSamples,
  DegeneratePlane,
  LeftChart,
  DegenerateSpeed,
  KappaVanishes,
  DegenerateFrame,
  IllConditionedBasis,
  NotAdmissible,
  Profile,
  NoConvergence,
  Unreachable,
  ZeroRadius,
  UndefinedAngle,
  NonFinite,
  Config,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure surfaced by the library. `sample()` carries the offending
// sample index when the error is tied to a position along a curve.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> sample = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> sample() const noexcept { return sample_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> sample_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what,
                       std::optional<std::size_t> sample = std::nullopt);

}  // namespace curvrad
