// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdlib>
#include <iostream>

#include "lagpants/tools/verify.hpp"

int main(int argc, char** argv) {
  lagpants::tools::VerifyOptions opt;
  opt.fixtures = argc > 1 ? argv[1] : LAGPANTS_FIXTURE_DIR;
  if (argc > 2) opt.seed = std::strtoull(argv[2], nullptr, 10);
  auto results = lagpants::tools::run_suite("all", opt);
  std::cout << lagpants::tools::format_report(results, true);
  for (const auto& r : results)
    if (!r.passed) return 1;
  return 0;
}
