// Acceptance battery: runs every verification criterion at its pinned
// threshold and wall-clock budget, printing one PASS/FAIL line per criterion.
// Exits nonzero if any criterion fails.

#include <cstdio>
#include <exception>
#include <map>
#include <string>

#include "curvpos/report.hpp"

namespace {

// wall-clock budget per criterion, seconds
const std::map<int, double> kBudgetSeconds = {
    {1, 30.0}, {2, 5.0}, {3, 1.0}, {4, 5.0},  {5, 5.0},  {6, 10.0},
    {7, 2.0},  {8, 10.0}, {9, 5.0}, {10, 60.0}, {11, 1.0}, {12, 5.0},
};

int criterion_number(const std::string& name) {
  // names look like "criterion N - ..."
  return std::atoi(name.c_str() + std::string("criterion ").size());
}

}  // namespace

int main() {
  try {
    const std::vector<curvpos::SuiteCheck> checks =
        curvpos::run_suite_checks("all", curvpos::kDefaultMasterSeed);
    int failed = 0;
    for (const auto& check : checks) {
      const int number = criterion_number(check.name);
      const double budget = kBudgetSeconds.count(number) ? kBudgetSeconds.at(number) : 60.0;
      const bool in_budget = check.elapsed_ms <= budget * 1000.0;
      const bool pass = check.pass && in_budget;
      std::printf("[%s] %s  (%.0f ms, budget %.0f s)\n        %s\n", pass ? "PASS" : "FAIL",
                  check.name.c_str(), check.elapsed_ms, budget, check.detail.c_str());
      if (!in_budget) std::printf("        exceeded wall-clock budget\n");
      if (!pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(checks.size()) - failed,
                checks.size());
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
    return 2;
  }
}
