#include "curvrad/model_spec.hpp"

#include <charconv>
#include <memory>
#include <vector>

#include "curvrad/errors.hpp"
#include "curvrad/expression.hpp"

namespace curvrad {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

std::string strip_spaces(std::string s) {
  std::erase_if(s, [](char c) { return c == ' ' || c == '\t'; });
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

MetricModel parse_custom(const std::string& spec, double fd_step) {
  const std::string body = spec.substr(5);
  const auto colon = body.find(':');
  if (colon == std::string::npos)
    fail(ErrorKind::Config, "custom metric '" + spec + "' must look like expr:VARS:MATRIX");
  std::vector<std::string> vars;
  for (const auto& v : split(body.substr(0, colon), ',')) {
    const std::string name = trim(v);
    if (name.empty()) fail(ErrorKind::Config, "empty coordinate name in '" + spec + "'");
    vars.push_back(name);
  }
  const int n = static_cast<int>(vars.size());
  const auto rows = split(body.substr(colon + 1), ';');
  if (static_cast<int>(rows.size()) != n)
    fail(ErrorKind::Config, "custom metric '" + spec + "' has " + std::to_string(rows.size()) +
                                " rows for " + std::to_string(n) + " coordinates");

  auto entries = std::make_shared<std::vector<Expression>>();
  for (int i = 0; i < n; ++i) {
    const auto cols = split(rows[static_cast<std::size_t>(i)], ',');
    if (static_cast<int>(cols.size()) != n)
      fail(ErrorKind::Config, "row " + std::to_string(i + 1) + " of '" + spec + "' has " +
                                  std::to_string(cols.size()) + " entries, expected " +
                                  std::to_string(n));
    for (const auto& c : cols) entries->emplace_back(trim(c), vars);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (strip_spaces((*entries)[i * n + j].source()) !=
          strip_spaces((*entries)[j * n + i].source()))
        fail(ErrorKind::Config, "custom metric '" + spec + "' is not symmetric at (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }

  auto metric = [entries, n](const Vec& x) -> Mat {
    Mat g(n, n);
    const std::span<const double> args(x.data(), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = (*entries)[i * n + j](args);
    return g;
  };
  auto domain = [metric](const Vec& x) {
    const Mat g = metric(x);
    if (!g.allFinite()) return false;
    Eigen::LLT<Mat> llt(g);
    return llt.info() == Eigen::Success;
  };
  return MetricModel(spec, n, metric, {}, domain, fd_step);
}

}  // namespace

MetricModel parse_model(const std::string& raw, double fd_step) {
  const std::string spec = trim(raw);
  MetricModel model = [&]() -> MetricModel {
    if (spec == "sphere2") return sphere2();
    if (spec == "hyperbolic2") return hyperbolic2();
    if (spec.rfind("euclidean:", 0) == 0) {
      const std::string digits = spec.substr(10);
      int n = 0;
      auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec != std::errc() || end != digits.data() + digits.size() || n < 1 || n > 16)
        fail(ErrorKind::Config, "bad dimension in model spec '" + spec + "'");
      return euclidean(n);
    }
    if (spec.rfind("expr:", 0) == 0) return parse_custom(spec, fd_step);
    fail(ErrorKind::Config, "unknown model spec '" + spec +
                                "' (expected euclidean:N, sphere2, hyperbolic2 or expr:VARS:MATRIX)");
  }();
  return model.with_fd_step(fd_step);
}

}  // namespace curvrad
