#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lagpants/lift.hpp"

namespace lagpants::tools {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kInputError = 2, kNumericFailure = 3 };

struct RunConfig {
  std::string command;
  std::vector<std::filesystem::path> inputs;
  int resolution = 128;
  double scale = 1.0;  // t
  std::uint64_t seed = 7;
  std::filesystem::path out = ".";
  std::string section;  // "t=0.2"
  bool pl_only = false;
  TwistData twist;
  bool check_smooth = false;
  bool default_zero = false;
  int n = 1;
  double lambda = 1.0;
  std::optional<double> truncation;  // schedule override
  std::string suite = "all";
  std::filesystem::path fixtures;
  std::string command_line;  // embedded in every SVG

  // Throws ConfigError when a field is out of range.
  void validate() const;
};

// Parses "edge=E,winding=N" into cfg.twist.
void add_twist(RunConfig& cfg, const std::string& spec);

int cmd_tropical(const RunConfig& cfg, std::ostream& out);
int cmd_pants(const RunConfig& cfg, std::ostream& out);
int cmd_lift(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_toric(const RunConfig& cfg, std::ostream& out);

// Runs a command and maps library errors to exit codes, writing the message to err.
int run_guarded(int (*cmd)(const RunConfig&, std::ostream&), const RunConfig& cfg, std::ostream& out,
                std::ostream& err);

}  // namespace lagpants::tools
