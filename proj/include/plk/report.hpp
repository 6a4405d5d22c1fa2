#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plk/io.hpp"

namespace plk {

struct RunOptions {
  std::vector<std::string> ids;
  std::vector<std::string> instance_files;
  std::optional<std::size_t> max_len;
  Rational lambda{1};
  // Standard metric selection for the metric and curvature commands.
  std::optional<int> case_no;
  std::optional<Rational> alpha, beta;
  Rational c1{1}, c2{0}, c3{1};
};

enum ExitCode { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitSchema = 3 };

struct RunResult {
  Json json;
  std::string text;
  int exit_code = kExitPass;
};

// Commands: check, construct, calculus, groupdga, metric, curvature, su2,
// catalog.  Errors are folded into the result: unknown instances and bad
// usage give 2, schema violations 3, failed checks 1.
RunResult run_report(const std::string& command, const RunOptions& opt);

const std::vector<std::string>& report_commands();

}  // namespace plk
