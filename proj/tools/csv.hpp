#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvrad::cli {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  // Index of a named column, or -1.
  int column(const std::string& name) const;
};

// Reads a numeric CSV with a header row. Blank lines and lines starting with
// '#' are skipped. Throws Error(Config) with the line number on bad input.
Table read_csv(const std::string& path);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void header(const std::vector<std::string>& names);
  // Values are written with 17 significant digits so that the file
  // round-trips exactly.
  void row(const std::vector<double>& values);

 private:
  std::ostream& out_;
};

std::string format_number(double v);

}  // namespace curvrad::cli
