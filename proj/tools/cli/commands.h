// Copyright 2026 The OrbitPKI Authors.
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

#ifndef ORBITPKI_TOOLS_CLI_COMMANDS_H_
#define ORBITPKI_TOOLS_CLI_COMMANDS_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace orbitpki::cli {

enum class Subcommand { kRun, kCompare, kWindows, kValidate };

enum class OutputFormat { kCsv, kJson, kText };

struct CliConfig {
  Subcommand subcommand = Subcommand::kRun;
  std::string scenario_path;
  std::string output_path;  // empty writes to stdout
  std::optional<OutputFormat> output_format;
  std::optional<unsigned long long> seed;
  std::optional<double> duration_s;
  bool trace = false;

  // compare
  std::vector<std::string> schemes;  // empty compares all six
  // windows
  std::string pair_from;
  std::string pair_to;
  std::optional<double> start_s;
  std::optional<double> horizon_s;
  // validate
  std::string fixture_path;
  std::string target;
  std::string anchor;
  double at_s = 0.0;
  std::optional<double> staleness_limit_s;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotValid = 2;

// Each command writes results to `out` (or the output file) and diagnostics
// to `err`, returning the process exit status.
int CmdRun(const CliConfig& config, std::ostream& out, std::ostream& err);
int CmdCompare(const CliConfig& config, std::ostream& out, std::ostream& err);
int CmdWindows(const CliConfig& config, std::ostream& out, std::ostream& err);
int CmdValidate(const CliConfig& config, std::ostream& out, std::ostream& err);

int Dispatch(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace orbitpki::cli

#endif  // ORBITPKI_TOOLS_CLI_COMMANDS_H_
