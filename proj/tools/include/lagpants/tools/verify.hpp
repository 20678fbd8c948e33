#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace lagpants::tools {

struct CriterionResult {
  int id = 0;
  std::string suite;
  bool passed = false;
  std::string detail;  // deterministic given the seed
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  std::filesystem::path fixtures;
  int resolution = 128;
};

// hessian, boundary, region, equivariance, legendre, decomposition, appendix,
// lift, maslov, exactness, topology, monotone; in criterion order.
const std::vector<std::string>& suite_names();

// "all" runs every suite. Throws InputError on an unknown name.
std::vector<CriterionResult> run_suite(const std::string& name, const VerifyOptions& opt);

// One line per criterion; timings are left out unless asked for so that
// reports for equal seeds compare byte for byte.
std::string format_report(const std::vector<CriterionResult>& results, bool with_timing = false);

}  // namespace lagpants::tools
