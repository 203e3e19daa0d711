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

#ifndef ORBITPKI_SCENARIOS_REPORT_H_
#define ORBITPKI_SCENARIOS_REPORT_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbitpki/pki/bytes.h"
#include "orbitpki/sim/engine.h"
#include "orbitpki/sim/latency.h"
#include "orbitpki/sim/trace.h"

namespace orbitpki::scenarios {

// Seconds. Percentiles use the nearest-rank method.
struct Stats {
  std::size_t count = 0;
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
  double p50 = 0.0;
  double p90 = 0.0;
  double p99 = 0.0;
  bool operator==(const Stats&) const = default;
};

Stats ComputeStats(std::vector<double> values);

// Latency statistics cover completed records only.
struct SchemeSummary {
  std::string scheme;
  std::size_t requests = 0;
  std::size_t completed = 0;
  std::size_t dropped = 0;
  std::size_t pending = 0;
  std::size_t cache_hits = 0;
  std::map<std::string, std::size_t> status_counts;
  Stats total;
  Stats wait_visibility;
  Stats propagation;
  Stats queuing;
  Stats processing;
  bool operator==(const SchemeSummary&) const = default;
};

SchemeSummary Summarize(const std::string& scheme,
                        std::span<const sim::LatencyRecord> records);

using ReportHeader = std::vector<std::pair<std::string, std::string>>;

struct LatencyReport {
  std::string scenario;
  ReportHeader header;
  std::vector<sim::LatencyRecord> records;
  std::vector<SchemeSummary> summaries;
  std::vector<sim::TraceRecord> trace;
  pki::Digest trace_digest{};
  // Digest over the request-initiation events only; equal across schemes
  // fed the same workload.
  pki::Digest workload_digest{};
  sim::RunStats stats;

  const SchemeSummary& Summary() const { return summaries.front(); }
};

// "# key,value" header lines, one row per record, then "# summary" rows.
std::string ToCsv(const LatencyReport& report);
nlohmann::json ToJson(const LatencyReport& report);

// Inverses used to compare formats. Both return records only.
std::vector<sim::LatencyRecord> RecordsFromCsv(const std::string& csv);
std::vector<sim::LatencyRecord> RecordsFromJson(const nlohmann::json& json);

struct Comparison {
  std::vector<LatencyReport> reports;  // one per scheme, in request order
};

// Side-by-side summary table, one row per scheme.
std::string ToCsv(const Comparison& comparison);
nlohmann::json ToJson(const Comparison& comparison);

}  // namespace orbitpki::scenarios

#endif  // ORBITPKI_SCENARIOS_REPORT_H_
