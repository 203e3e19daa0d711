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

#include "cli/commands.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "orbitpki/error.h"
#include "orbitpki/geometry/visibility.h"
#include "orbitpki/io/fixture_json.h"
#include "orbitpki/io/scenario_json.h"
#include "orbitpki/pki/bytes.h"
#include "orbitpki/scenarios/runner.h"
#include "orbitpki/sim/time.h"
#include "orbitpki/sim/trace.h"
#include "orbitpki/trust/trust_graph.h"
#include "orbitpki/trust/validator.h"

namespace orbitpki::cli {

namespace {

namespace fs = std::filesystem;
using scenarios::Scenario;

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  file << content;
  file.close();
  if (!file) throw Error(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

// Sends `content` to the output file when one is configured, else to `out`.
void Emit(const CliConfig& config, const std::string& content, std::ostream& out) {
  if (config.output_path.empty()) {
    out << content;
  } else {
    WriteFile(config.output_path, content);
  }
}

Scenario LoadWithOverrides(const CliConfig& config) {
  if (config.scenario_path.empty()) {
    throw Error(ErrorCode::kConfiguration, "--scenario is required");
  }
  Scenario s = io::LoadScenario(config.scenario_path);
  if (config.seed) s.seed = *config.seed;
  if (config.duration_s) s.duration_s = *config.duration_s;
  s.Validate();
  return s;
}

OutputFormat ReportFormat(const CliConfig& config) {
  const OutputFormat f = config.output_format.value_or(OutputFormat::kCsv);
  if (f == OutputFormat::kText) {
    throw Error(ErrorCode::kConfiguration, "reports support --format csv or json");
  }
  return f;
}

// <out>.trace.ndjson, or <scenario name>[.<suffix>].trace.ndjson when the
// report goes to stdout.
fs::path TracePath(const CliConfig& config, const Scenario& s,
                   const std::string& suffix) {
  std::string base = config.output_path.empty() ? s.name : config.output_path;
  if (!suffix.empty()) base += "." + suffix;
  return base + ".trace.ndjson";
}

template <typename Fn>
int Guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

std::string FormatFixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

int CmdRun(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const Scenario s = LoadWithOverrides(config);
    const OutputFormat format = ReportFormat(config);
    const scenarios::LatencyReport report = scenarios::RunScenario(s);
    Emit(config,
         format == OutputFormat::kCsv ? scenarios::ToCsv(report)
                                      : scenarios::ToJson(report).dump(2) + "\n",
         out);
    if (config.trace) {
      const fs::path path = TracePath(config, s, "");
      WriteFile(path, sim::ToNdjson(report.trace));
      err << "trace: " << path.string() << " (" << report.trace.size()
          << " events, digest " << pki::ToHex(report.trace_digest) << ")\n";
    }
    return kExitOk;
  });
}

int CmdCompare(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const Scenario s = LoadWithOverrides(config);
    const OutputFormat format = ReportFormat(config);
    std::vector<scenarios::SchemeId> schemes;
    if (config.schemes.empty()) {
      schemes.assign(std::begin(scenarios::kAllSchemes), std::end(scenarios::kAllSchemes));
    } else {
      for (const auto& name : config.schemes) schemes.push_back(scenarios::ParseScheme(name));
    }
    const scenarios::Comparison cmp = scenarios::CompareSchemes(s, schemes);
    Emit(config,
         format == OutputFormat::kCsv ? scenarios::ToCsv(cmp)
                                      : scenarios::ToJson(cmp).dump(2) + "\n",
         out);
    if (config.trace) {
      for (const auto& r : cmp.reports) {
        const fs::path path = TracePath(config, s, r.Summary().scheme);
        WriteFile(path, sim::ToNdjson(r.trace));
        err << "trace: " << path.string() << "\n";
      }
    }
    return kExitOk;
  });
}

int CmdWindows(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const Scenario s = LoadWithOverrides(config);
    const auto* a = s.FindNode(config.pair_from);
    const auto* b = s.FindNode(config.pair_to);
    std::string missing;
    if (a == nullptr) missing += " '" + config.pair_from + "'";
    if (b == nullptr) missing += " '" + config.pair_to + "'";
    if (!missing.empty()) {
      throw Error(ErrorCode::kNotFound, "unknown pair member(s):" + missing);
    }
    const double start = config.start_s.value_or(0.0);
    const double horizon = config.horizon_s.value_or(s.duration_s);
    const auto windows =
        geometry::VisibilityWindows(a->geometry, b->geometry, start, horizon,
                                    s.options.link, s.options.search);
    const OutputFormat format = config.output_format.value_or(OutputFormat::kCsv);
    std::ostringstream text;
    if (format == OutputFormat::kJson) {
      nlohmann::json doc = {{"from", a->name},
                            {"to", b->name},
                            {"start_s", start},
                            {"horizon_s", horizon},
                            {"windows", nlohmann::json::array()}};
      for (const auto& w : windows) {
        doc["windows"].push_back(
            {{"start_s", w.start_s}, {"end_s", w.end_s}, {"duration_s", w.DurationS()}});
      }
      text << doc.dump(2) << "\n";
    } else {
      text << "# from," << a->name << "\n# to," << b->name << "\n# start_s,"
           << FormatFixed(start, 3) << "\n# horizon_s," << FormatFixed(horizon, 3)
           << "\n# windows," << windows.size() << "\n";
      text << "start_s,end_s,duration_s,duration_min\n";
      for (const auto& w : windows) {
        text << FormatFixed(w.start_s, 1) << "," << FormatFixed(w.end_s, 1) << ","
             << FormatFixed(w.DurationS(), 1) << ","
             << FormatFixed(w.DurationS() / 60.0, 2) << "\n";
      }
    }
    Emit(config, text.str(), out);
    return kExitOk;
  });
}

int CmdValidate(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    if (config.fixture_path.empty()) {
      throw Error(ErrorCode::kConfiguration, "--fixture is required");
    }
    const io::TrustFixture fixture = io::LoadFixture(config.fixture_path);
    const pki::Certificate& anchor = fixture.FindAnchor(config.anchor);
    const pki::Certificate& target = fixture.FindBySubject(config.target);
    trust::TrustGraph graph;
    for (const auto& a : fixture.anchors) graph.AddAnchor(a);
    graph.AddAll(fixture.certificates);
    trust::ValidationOptions options;
    if (config.staleness_limit_s) options.staleness_limit_s = *config.staleness_limit_s;
    const trust::ValidationResult result =
        trust::ValidateTarget(graph, target, anchor, config.at_s, fixture.crls,
                              fixture.ContextFor(anchor), options);
    const OutputFormat format = config.output_format.value_or(OutputFormat::kText);
    Emit(config,
         format == OutputFormat::kJson ? io::ResultToJson(result).dump(2) + "\n"
                                       : io::ResultToText(result),
         out);
    return result.ok() ? kExitOk : kExitNotValid;
  });
}

int Dispatch(const CliConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.subcommand) {
    case Subcommand::kRun:
      return CmdRun(config, out, err);
    case Subcommand::kCompare:
      return CmdCompare(config, out, err);
    case Subcommand::kWindows:
      return CmdWindows(config, out, err);
    case Subcommand::kValidate:
      return CmdValidate(config, out, err);
  }
  return kExitError;
}

}  // namespace orbitpki::cli
