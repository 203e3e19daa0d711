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

#include "orbitpki/scenarios/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "orbitpki/error.h"

namespace orbitpki::scenarios {

namespace {

std::string Fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

std::string Exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(std::move(field));
  return out;
}

// SPC_RP#0>SPC_VA#0@9000|SPC_VA#0>SPC_RP#0@9000
std::string FormatHops(const std::vector<sim::Hop>& hops) {
  std::string out;
  for (const auto& h : hops) {
    if (!out.empty()) out += '|';
    out += h.from.ToString() + '>' + h.to.ToString() + '@' + Exact(h.distance_km);
  }
  return out;
}

std::vector<sim::Hop> ParseHops(const std::string& text) {
  std::vector<sim::Hop> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '|')) {
    const auto gt = item.find('>');
    const auto at = item.find('@');
    if (gt == std::string::npos || at == std::string::npos) {
      throw Error(ErrorCode::kParse, "bad hop '" + item + "'");
    }
    out.push_back(sim::Hop{actors::ParseActorId(item.substr(0, gt)),
                           actors::ParseActorId(item.substr(gt + 1, at - gt - 1)),
                           std::stod(item.substr(at + 1))});
  }
  return out;
}

constexpr char kCsvColumns[] =
    "request_id,scheme,requester,target,outcome,status,cache_hit,"
    "t_initiated_s,t_completed_s,total_s,wait_visibility_s,propagation_s,"
    "queuing_s,processing_s,hops";

void AppendStatsRow(std::string& out, const std::string& scheme,
                    const char* metric, const Stats& s) {
  out += "# summary," + scheme + "," + metric + "," + std::to_string(s.count) +
         "," + Fixed9(s.min) + "," + Fixed9(s.mean) + "," + Fixed9(s.max) + "," +
         Fixed9(s.p50) + "," + Fixed9(s.p90) + "," + Fixed9(s.p99) + "\n";
}

nlohmann::json StatsJson(const Stats& s) {
  return {{"count", s.count}, {"min_s", s.min}, {"mean_s", s.mean},
          {"max_s", s.max},   {"p50_s", s.p50}, {"p90_s", s.p90},
          {"p99_s", s.p99}};
}

nlohmann::json SummaryJson(const SchemeSummary& s) {
  return {{"scheme", s.scheme},
          {"requests", s.requests},
          {"completed", s.completed},
          {"dropped", s.dropped},
          {"pending", s.pending},
          {"cache_hits", s.cache_hits},
          {"status_counts", s.status_counts},
          {"total", StatsJson(s.total)},
          {"wait_visibility", StatsJson(s.wait_visibility)},
          {"propagation", StatsJson(s.propagation)},
          {"queuing", StatsJson(s.queuing)},
          {"processing", StatsJson(s.processing)}};
}

}  // namespace

Stats ComputeStats(std::vector<double> values) {
  Stats s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  std::sort(values.begin(), values.end());
  const auto rank = [&](double p) {
    const auto n = static_cast<double>(values.size());
    const auto idx = static_cast<std::size_t>(std::ceil(p / 100.0 * n));
    return values[std::clamp<std::size_t>(idx, 1, values.size()) - 1];
  };
  s.min = values.front();
  s.max = values.back();
  s.mean = sum / static_cast<double>(values.size());
  s.p50 = rank(50);
  s.p90 = rank(90);
  s.p99 = rank(99);
  return s;
}

SchemeSummary Summarize(const std::string& scheme,
                        std::span<const sim::LatencyRecord> records) {
  SchemeSummary s;
  s.scheme = scheme;
  std::vector<double> total, wait, prop, queue, proc;
  for (const auto& r : records) {
    ++s.requests;
    switch (r.outcome) {
      case sim::Outcome::kCompleted:
        ++s.completed;
        break;
      case sim::Outcome::kDropped:
        ++s.dropped;
        break;
      case sim::Outcome::kPending:
        ++s.pending;
        break;
    }
    if (r.cache_hit) ++s.cache_hits;
    if (r.status) ++s.status_counts[std::string(trust::StatusName(*r.status))];
    if (r.outcome != sim::Outcome::kCompleted) continue;
    total.push_back(sim::ToSeconds(r.Total()));
    wait.push_back(sim::ToSeconds(r.cost.wait_visibility));
    prop.push_back(sim::ToSeconds(r.cost.propagation));
    queue.push_back(sim::ToSeconds(r.cost.queuing));
    proc.push_back(sim::ToSeconds(r.cost.processing));
  }
  s.total = ComputeStats(std::move(total));
  s.wait_visibility = ComputeStats(std::move(wait));
  s.propagation = ComputeStats(std::move(prop));
  s.queuing = ComputeStats(std::move(queue));
  s.processing = ComputeStats(std::move(proc));
  return s;
}

std::string ToCsv(const LatencyReport& report) {
  std::string out;
  for (const auto& [key, value] : report.header) {
    out += "# " + key + "," + value + "\n";
  }
  out += kCsvColumns;
  out += "\n";
  for (const auto& r : report.records) {
    out += std::to_string(r.request_id) + "," + r.scheme + "," + r.requester +
           "," + r.target + "," + std::string(sim::OutcomeName(r.outcome)) + "," +
           (r.status ? std::string(trust::StatusName(*r.status)) : "") + "," +
           (r.cache_hit ? "1" : "0") + "," + sim::FormatSeconds(r.t_initiated) +
           "," + sim::FormatSeconds(r.t_completed) + "," +
           sim::FormatSeconds(r.Total()) + "," +
           sim::FormatSeconds(r.cost.wait_visibility) + "," +
           sim::FormatSeconds(r.cost.propagation) + "," +
           sim::FormatSeconds(r.cost.queuing) + "," +
           sim::FormatSeconds(r.cost.processing) + "," + FormatHops(r.cost.hops) +
           "\n";
  }
  out += "# summary,scheme,metric,count,min_s,mean_s,max_s,p50_s,p90_s,p99_s\n";
  for (const auto& s : report.summaries) {
    AppendStatsRow(out, s.scheme, "total", s.total);
    AppendStatsRow(out, s.scheme, "wait_visibility", s.wait_visibility);
    AppendStatsRow(out, s.scheme, "propagation", s.propagation);
    AppendStatsRow(out, s.scheme, "queuing", s.queuing);
    AppendStatsRow(out, s.scheme, "processing", s.processing);
    out += "# outcome," + s.scheme + ",requests," + std::to_string(s.requests) + "\n";
    out += "# outcome," + s.scheme + ",completed," + std::to_string(s.completed) + "\n";
    out += "# outcome," + s.scheme + ",dropped," + std::to_string(s.dropped) + "\n";
    out += "# outcome," + s.scheme + ",pending," + std::to_string(s.pending) + "\n";
    out += "# outcome," + s.scheme + ",cache_hits," + std::to_string(s.cache_hits) + "\n";
    for (const auto& [status, n] : s.status_counts) {
      out += "# status," + s.scheme + "," + status + "," + std::to_string(n) + "\n";
    }
  }
  return out;
}

nlohmann::json ToJson(const LatencyReport& report) {
  nlohmann::json header = nlohmann::json::array();
  for (const auto& [key, value] : report.header) {
    header.push_back({{"key", key}, {"value", value}});
  }
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json hops = nlohmann::json::array();
    for (const auto& h : r.cost.hops) {
      hops.push_back({{"from", h.from.ToString()},
                      {"to", h.to.ToString()},
                      {"distance_km", h.distance_km}});
    }
    records.push_back(
        {{"request_id", r.request_id},
         {"scheme", r.scheme},
         {"requester", r.requester},
         {"target", r.target},
         {"outcome", sim::OutcomeName(r.outcome)},
         {"status", r.status ? nlohmann::json(trust::StatusName(*r.status))
                             : nlohmann::json(nullptr)},
         {"cache_hit", r.cache_hit},
         {"t_initiated_ns", r.t_initiated},
         {"t_completed_ns", r.t_completed},
         {"wait_visibility_ns", r.cost.wait_visibility},
         {"propagation_ns", r.cost.propagation},
         {"queuing_ns", r.cost.queuing},
         {"processing_ns", r.cost.processing},
         {"total_s", sim::ToSeconds(r.Total())},
         {"hops", hops}});
  }
  nlohmann::json summaries = nlohmann::json::array();
  for (const auto& s : report.summaries) summaries.push_back(SummaryJson(s));
  return {{"scenario", report.scenario},
          {"header", header},
          {"records", records},
          {"summary", summaries},
          {"trace_digest", pki::ToHex(report.trace_digest)},
          {"workload_digest", pki::ToHex(report.workload_digest)}};
}

std::vector<sim::LatencyRecord> RecordsFromCsv(const std::string& csv) {
  std::vector<sim::LatencyRecord> out;
  std::stringstream ss(csv);
  std::string line;
  bool in_body = false;
  while (std::getline(ss, line)) {
    if (line.starts_with("#")) continue;
    if (!in_body) {
      if (line != kCsvColumns) {
        throw Error(ErrorCode::kParse, "unexpected CSV column header");
      }
      in_body = true;
      continue;
    }
    const auto f = SplitCsvLine(line);
    if (f.size() != 15) {
      throw Error(ErrorCode::kParse, "CSV row has " + std::to_string(f.size()) +
                                         " fields: " + line);
    }
    sim::LatencyRecord r;
    r.request_id = std::stoull(f[0]);
    r.scheme = f[1];
    r.requester = f[2];
    r.target = f[3];
    r.outcome = sim::ParseOutcome(f[4]);
    if (!f[5].empty()) r.status = trust::ParseStatus(f[5]);
    r.cache_hit = f[6] == "1";
    r.t_initiated = sim::ParseSeconds(f[7]);
    r.t_completed = sim::ParseSeconds(f[8]);
    r.cost.wait_visibility = sim::ParseSeconds(f[10]);
    r.cost.propagation = sim::ParseSeconds(f[11]);
    r.cost.queuing = sim::ParseSeconds(f[12]);
    r.cost.processing = sim::ParseSeconds(f[13]);
    r.cost.hops = ParseHops(f[14]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<sim::LatencyRecord> RecordsFromJson(const nlohmann::json& json) {
  std::vector<sim::LatencyRecord> out;
  try {
    for (const auto& j : json.at("records")) {
      sim::LatencyRecord r;
      r.request_id = j.at("request_id").get<std::uint64_t>();
      r.scheme = j.at("scheme").get<std::string>();
      r.requester = j.at("requester").get<std::string>();
      r.target = j.at("target").get<std::string>();
      r.outcome = sim::ParseOutcome(j.at("outcome").get<std::string>());
      if (!j.at("status").is_null()) {
        r.status = trust::ParseStatus(j.at("status").get<std::string>());
      }
      r.cache_hit = j.at("cache_hit").get<bool>();
      r.t_initiated = j.at("t_initiated_ns").get<sim::SimTime>();
      r.t_completed = j.at("t_completed_ns").get<sim::SimTime>();
      r.cost.wait_visibility = j.at("wait_visibility_ns").get<sim::SimTime>();
      r.cost.propagation = j.at("propagation_ns").get<sim::SimTime>();
      r.cost.queuing = j.at("queuing_ns").get<sim::SimTime>();
      r.cost.processing = j.at("processing_ns").get<sim::SimTime>();
      for (const auto& h : j.at("hops")) {
        r.cost.hops.push_back(
            sim::Hop{actors::ParseActorId(h.at("from").get<std::string>()),
                     actors::ParseActorId(h.at("to").get<std::string>()),
                     h.at("distance_km").get<double>()});
      }
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad report JSON: ") + e.what());
  }
  return out;
}

std::string ToCsv(const Comparison& comparison) {
  std::string out =
      "scheme,requests,completed,dropped,pending,min_total_s,mean_total_s,"
      "max_total_s,p50_total_s,p90_total_s,p99_total_s,mean_wait_visibility_s,"
      "mean_propagation_s,mean_queuing_s,workload_digest\n";
  for (const auto& report : comparison.reports) {
    const auto& s = report.Summary();
    out += s.scheme + "," + std::to_string(s.requests) + "," +
           std::to_string(s.completed) + "," + std::to_string(s.dropped) + "," +
           std::to_string(s.pending) + "," + Fixed9(s.total.min) + "," +
           Fixed9(s.total.mean) + "," + Fixed9(s.total.max) + "," +
           Fixed9(s.total.p50) + "," + Fixed9(s.total.p90) + "," +
           Fixed9(s.total.p99) + "," + Fixed9(s.wait_visibility.mean) + "," +
           Fixed9(s.propagation.mean) + "," + Fixed9(s.queuing.mean) + "," +
           pki::ToHex(report.workload_digest) + "\n";
  }
  return out;
}

nlohmann::json ToJson(const Comparison& comparison) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& report : comparison.reports) {
    auto row = SummaryJson(report.Summary());
    row["scenario"] = report.scenario;
    row["workload_digest"] = pki::ToHex(report.workload_digest);
    rows.push_back(std::move(row));
  }
  return {{"comparison", rows}};
}

}  // namespace orbitpki::scenarios
