#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvrad/config.hpp"

namespace curvrad {

enum class Compare { AtMost, AtLeast, Below };

// One measured quantity compared against a fixed bound.
struct CheckRow {
  std::string label;
  double measured = 0.0;
  double bound = 0.0;
  Compare compare = Compare::AtMost;
  bool passed = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string property;
  std::vector<CheckRow> rows;
  // Wall-clock limit, when the criterion has one. Timings are kept out of
  // the report text so that reports stay byte-for-byte reproducible.
  std::optional<double> runtime_limit;
  double runtime = 0.0;
  std::string error;  // set when a check threw

  bool runtime_ok() const { return !runtime_limit || runtime < *runtime_limit; }
  // All rows pass and nothing threw; ignores the runtime limit.
  bool checks_passed() const;
  bool passed() const { return checks_passed() && runtime_ok(); }
  // The row with the worst margin, used for one-line summaries.
  const CheckRow* worst() const;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;

  bool passed() const;
  bool checks_passed() const;
  // Summary table: one block per criterion with its rows. Does not contain
  // timings.
  std::string text() const;
};

inline constexpr int kCriterionCount = 14;

// Runs a single criterion (1 … kCriterionCount).
CriterionResult run_criterion(int id, const RunConfig& cfg);

// Runs the criteria in `ids` (all when empty), in ascending order. Criterion
// 14 reruns criteria 1–13 and compares the report text.
AcceptanceReport run_acceptance(const RunConfig& cfg, const std::vector<int>& ids = {});

}  // namespace curvrad
