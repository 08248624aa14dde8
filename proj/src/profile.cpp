#include "curvrad/profile.hpp"

#include <cmath>
#include <sstream>

#include "curvrad/errors.hpp"

namespace curvrad {

MetricProfile MetricProfile::constant(double a, double b) {
  if (!(b > 0.0)) fail(ErrorKind::Profile, "profile coefficient b must be positive");
  if (!std::isfinite(a)) fail(ErrorKind::Profile, "profile coefficient a must be finite");
  MetricProfile p;
  p.constant_ = true;
  p.a0_ = a;
  p.b0_ = b;
  return p;
}

MetricProfile MetricProfile::radial(const std::string& a, const std::string& b) {
  MetricProfile p;
  p.constant_ = false;
  p.a_expr_ = Expression(a, {"r"});
  p.b_expr_ = Expression(b, {"r"});
  return p;
}

double MetricProfile::a_at(double r) const {
  if (constant_) return a0_ / r;
  return a_expr_(r);
}

double MetricProfile::b_at(double r) const {
  const double b = constant_ ? b0_ / r : b_expr_(r);
  if (!(b > 0.0))
    fail(ErrorKind::Profile, "profile b(r) is not positive at r = " + std::to_string(r));
  return b;
}

MetricProfile MetricProfile::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    fail(ErrorKind::Config, "profile '" + spec + "' must look like const:a=..,b=.. or radial:a=..,b=..");
  const std::string kind = spec.substr(0, colon);
  std::string a_text, b_text;
  std::stringstream body(spec.substr(colon + 1));
  std::string item;
  while (std::getline(body, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(ErrorKind::Config, "profile entry '" + item + "' lacks '='");
    std::string key = item.substr(0, eq);
    std::erase(key, ' ');
    const std::string value = item.substr(eq + 1);
    if (key == "a") a_text = value;
    else if (key == "b") b_text = value;
    else fail(ErrorKind::Config, "unknown profile key '" + key + "' in '" + spec + "'");
  }
  if (a_text.empty() || b_text.empty())
    fail(ErrorKind::Config, "profile '" + spec + "' must set both a and b");

  if (kind == "const") {
    const Expression a(a_text, {}), b(b_text, {});
    if (!a.is_constant() || !b.is_constant())
      fail(ErrorKind::Config, "const profile entries must be numbers");
    const double zero = 0.0;
    try {
      return constant(a(std::span<const double>(&zero, 0)), b(std::span<const double>(&zero, 0)));
    } catch (const Error& e) {
      fail(ErrorKind::Config, e.what());
    }
  }
  if (kind == "radial") return radial(a_text, b_text);
  fail(ErrorKind::Config, "unknown profile kind '" + kind + "'");
}

std::string MetricProfile::str() const {
  if (!constant_) return "radial:a=" + a_expr_.source() + ",b=" + b_expr_.source();
  std::ostringstream os;
  os.precision(17);
  os << "const:a=" << a0_ << ",b=" << b0_;
  return os.str();
}

}  // namespace curvrad
