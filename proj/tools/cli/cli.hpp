// Copyright 2026 The ahmclass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AHM_TOOLS_CLI_HPP
#define AHM_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ahm::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidDiscriminant = 2,
  kParseError = 3,
  kPole = 4,
  kAnomaly = 5,
  kPrecisionExhausted = 6,
};

enum class Command { forms, eval, classpoly, galois_check, sweep, jacobian_scan };
enum class Format { json, csv, pretty };

struct CliConfig {
  Command command = Command::forms;
  int precision = 256;
  int max_precision = 8192;
  Format output_format = Format::pretty;
  std::optional<std::string> output_path;
  std::optional<std::string> f_expr;
  std::optional<int> degree_bound;

  std::int64_t delta = 0;
  std::int64_t level = 1;
  std::string tau;
  std::int64_t from = -3;
  std::int64_t to = -100;
  bool fundamental = false;
  int jobs = 0;
  bool timing = false;
  bool expect_irreducible = false;
  bool adversarial = false;
  std::optional<std::string> anomaly_dir;
  std::string y_min = "1.1";
  std::string y_max = "2.0";
  int samples = 20;
};

// Runs the tool. Results go to `out` (or --output), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ahm::cli

#endif  // AHM_TOOLS_CLI_HPP
