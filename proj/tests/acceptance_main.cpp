// Runs the acceptance battery and prints one line per criterion.
// Usage: wavelab_acceptance [--strict] [--jobs k] [id...]

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "wavelab/acceptance.hpp"

int main(int argc, char** argv) {
  wavelab::AcceptanceOptions options;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--strict") {
      options.strict = true;
    } else if (arg == "--jobs" && i + 1 < argc) {
      options.jobs = std::atoi(argv[++i]);
    } else {
      ids.push_back(std::atoi(arg.c_str()));
    }
  }
  int failed = 0;
  for (int id = 1; id <= wavelab::acceptance_criterion_count(); ++id) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
    const auto result = wavelab::run_criterion(id, options);
    std::cout << wavelab::format_criterion(result) << std::endl;
    if (!result.passed) ++failed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " failing criteria" << std::endl;
  return failed ? 1 : 0;
}
