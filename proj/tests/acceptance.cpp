// Acceptance runner: one line per criterion, then a determinism check of the
// CLI report. Exit status is nonzero if anything fails.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "curvrad/acceptance.hpp"

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string describe(const curvrad::CheckRow& r) {
  const char* op = r.compare == curvrad::Compare::AtMost    ? "<="
                   : r.compare == curvrad::Compare::AtLeast ? ">="
                                                            : "<";
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s = %.3e %s %.3e", r.label.c_str(), r.measured, op, r.bound);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "curvrad_acceptance";
  fs::create_directories(dir);

  const curvrad::RunConfig cfg;
  bool ok = true;
  for (int id = 1; id <= curvrad::kCriterionCount; ++id) {
    const curvrad::CriterionResult r = curvrad::run_criterion(id, cfg);
    ok = ok && r.passed();
    std::cout << (r.passed() ? "PASS" : "FAIL") << "  criterion " << id << " " << r.name << ": ";
    if (!r.error.empty()) {
      std::cout << "error: " << r.error;
    } else if (const curvrad::CheckRow* w = r.worst()) {
      std::cout << "worst " << describe(*w) << " (" << r.rows.size() << " checks)";
    }
    if (r.runtime_limit) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "; runtime %.3f s < %.0f s%s", r.runtime, *r.runtime_limit,
                    r.runtime_ok() ? "" : " EXCEEDED");
      std::cout << buf;
    }
    std::cout << '\n';
  }

  // Same config through the CLI twice; the report files must match exactly.
  const fs::path a = dir / "report_a.txt";
  const fs::path b = dir / "report_b.txt";
  bool same = false;
  int codes[2] = {-1, -1};
  int i = 0;
  for (const fs::path& p : {a, b}) {
    const std::string cmd = std::string("\"") + CURVRAD_CLI + "\" verify-all -o \"" + p.string() +
                            "\" 2>/dev/null";
    codes[i++] = std::system(cmd.c_str());
  }
  const std::string ra = slurp(a), rb = slurp(b);
  same = !ra.empty() && ra == rb;
  const bool cli_ok = same && codes[0] == 0 && codes[1] == 0;
  ok = ok && cli_ok;
  std::cout << (cli_ok ? "PASS" : "FAIL") << "  cli verify-all twice: " << ra.size() << " and "
            << rb.size() << " bytes, " << (same ? "identical" : "DIFFERENT")
            << ", exit codes " << codes[0] << " and " << codes[1] << '\n';
  std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << '\n';
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
