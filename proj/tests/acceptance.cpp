// Acceptance gate. Runs the named criterion (or all of them) and prints one
// pass/fail line each. Exits nonzero when any criterion fails, so each ctest
// entry guards a single criterion.

#include <cstdio>
#include <cstring>
#include <string>

#include "width2/verify.hpp"

int main(int argc, char** argv) {
  std::string suite = argc > 1 ? argv[1] : "";
  std::vector<width2::CriterionResult> results;
  try {
    results = width2::run_verification(suite);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  if (results.empty()) {
    std::fprintf(stderr, "error: no criterion named '%s'\n", suite.c_str());
    return 2;
  }
  int failed = 0;
  for (const width2::CriterionResult& r : results) {
    std::printf("%s %-15s %7.2fs  %s\n", r.pass ? "pass" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    if (!r.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
