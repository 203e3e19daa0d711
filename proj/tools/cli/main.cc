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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.h"
#include "orbitpki/version.h"

namespace {

using orbitpki::cli::CliConfig;
using orbitpki::cli::OutputFormat;
using orbitpki::cli::Subcommand;

const std::map<std::string, OutputFormat> kFormats = {
    {"csv", OutputFormat::kCsv}, {"json", OutputFormat::kJson}, {"text", OutputFormat::kText}};

void AddCommon(CLI::App* cmd, CliConfig& c) {
  cmd->add_option("--out", c.output_path, "Output file (default: stdout)");
  cmd->add_option("--format", c.output_format, "csv | json (validate: text | json)")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

void AddScenarioOptions(CLI::App* cmd, CliConfig& c) {
  cmd->add_option("--scenario", c.scenario_path, "Scenario JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", c.seed, "Override the scenario seed");
  cmd->add_option("--duration", c.duration_s, "Override duration_s")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Satellite PKI validation latency simulator"};
  app.set_version_flag("--version", std::string(orbitpki::Version()));
  app.require_subcommand(1, 1);
  CliConfig c;

  auto* run = app.add_subcommand("run", "Run one scenario and write its latency report");
  AddScenarioOptions(run, c);
  AddCommon(run, c);
  run->add_flag("--trace", c.trace, "Write the event trace as NDJSON next to the report");

  auto* compare =
      app.add_subcommand("compare", "Run several schemes on identical workload and geometry");
  AddScenarioOptions(compare, c);
  AddCommon(compare, c);
  compare->add_flag("--trace", c.trace, "Write one NDJSON trace per scheme");
  compare->add_option("--schemes", c.schemes, "Schemes to compare (default: all)")
      ->delimiter(',');

  auto* windows = app.add_subcommand("windows", "List visibility windows between two nodes");
  AddScenarioOptions(windows, c);
  AddCommon(windows, c);
  windows->add_option("--from", c.pair_from, "First node name")->required();
  windows->add_option("--to", c.pair_to, "Second node name")->required();
  windows->add_option("--start", c.start_s, "Search start in seconds (default 0)");
  windows->add_option("--horizon", c.horizon_s, "Search horizon in seconds (default duration_s)")
      ->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Validate a certificate from a fixture file");
  AddCommon(validate, c);
  validate->add_option("--fixture", c.fixture_path, "Trust fixture JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_option("--target", c.target, "Subject name of the target")->required();
  validate->add_option("--anchor", c.anchor, "Subject name of the trust anchor")->required();
  validate->add_option("--at", c.at_s, "Validation time in seconds")->required();
  validate->add_option("--staleness-limit", c.staleness_limit_s, "CRL staleness limit in seconds");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) c.subcommand = Subcommand::kRun;
  if (compare->parsed()) c.subcommand = Subcommand::kCompare;
  if (windows->parsed()) c.subcommand = Subcommand::kWindows;
  if (validate->parsed()) c.subcommand = Subcommand::kValidate;
  return orbitpki::cli::Dispatch(c, std::cout, std::cerr);
}
