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

// Acceptance suite: one PASS/FAIL line per criterion. `--only N` runs a
// single criterion; the exit status is nonzero when any selected criterion
// fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "orbitpki/geometry/constants.h"
#include "orbitpki/geometry/orbit.h"
#include "orbitpki/geometry/visibility.h"
#include "orbitpki/io/scenario_json.h"
#include "orbitpki/scenarios/runner.h"
#include "orbitpki/scenarios/world.h"
#include "orbitpki/sim/time.h"
#include "orbitpki/trust/path_builder.h"
#include "orbitpki/trust/trust_graph.h"
#include "orbitpki/trust/validator.h"
#include "support/oracles.h"

namespace orbitpki::acceptance {
namespace {

namespace g = geometry;
using scenarios::LatencyReport;
using scenarios::Scenario;
using Clock = std::chrono::steady_clock;

// Tolerances, in seconds unless noted.
constexpr double kCase1Leo = 0.060, kCase1LeoTol = 0.001;
constexpr double kCase1Meo = 0.033, kCase1MeoTol = 0.001;
constexpr double kCase2Leo = 0.232, kCase2Meo = 0.205, kCase2Tol = 0.002;
constexpr double kRelay = 0.492, kRelayRelTol = 0.05;
constexpr double kGeoGroundLeg = 0.260, kGeoGroundRelTol = 0.15;
constexpr double kRtt160 = 0.001, kRtt2000 = 0.014, kRttTol = 0.0005;
constexpr double kGpsPeriodS = 12 * 3600.0, kGpsPeriodRelTol = 0.02;
constexpr double kLeoPeriodMinS = 90 * 60.0, kLeoPeriodMaxS = 120 * 60.0;
constexpr double kPassMinS = 5 * 60.0, kPassMaxS = 12 * 60.0;
constexpr double kMaxRevisitGapS = 25 * 3600.0;
constexpr double kCase1RuntimeS = 1.0, kRevisitRuntimeS = 30.0;
constexpr int kTrustWorlds = 200, kTrustMaxCerts = 12, kTrustMaxDepth = 6;
constexpr int kRelayRequests = 25, kRelayCapacity = 20, kMinQueued = 5;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

bool Within(double value, double target, double tol) {
  return std::abs(value - target) <= tol;
}

Scenario Load(const std::string& name) {
  return io::LoadScenario(std::filesystem::path(ORBITPKI_SOURCE_DIR) / "scenarios" / name);
}

double MeanTotal(const LatencyReport& r) { return r.Summary().total.mean; }

bool AllCompleted(const LatencyReport& r) {
  return r.Summary().completed == r.Summary().requests && r.Summary().requests > 0;
}

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome C1() {
  const auto start = Clock::now();
  const LatencyReport r = scenarios::RunScenario(Load("ipki_case1.json"));
  const double runtime = Seconds(start);
  const double total = MeanTotal(r);
  return {AllCompleted(r) && Within(total, kCase1Leo, kCase1LeoTol) && runtime < kCase1RuntimeS,
          Fmt("total %.3f ms (60 +/- 1), runtime %.3f s (< %.0f)", total * 1e3, runtime,
              kCase1RuntimeS)};
}

Outcome C2() {
  const LatencyReport r = scenarios::RunScenario(Load("ipki_case1_meo.json"));
  const double total = MeanTotal(r);
  return {AllCompleted(r) && Within(total, kCase1Meo, kCase1MeoTol),
          Fmt("total %.3f ms (33 +/- 1)", total * 1e3)};
}

Outcome C3() {
  const LatencyReport leo = scenarios::RunScenario(Load("ipki_case2.json"));
  const LatencyReport meo = scenarios::RunScenario(Load("ipki_case2_meo.json"));
  const double a = MeanTotal(leo), b = MeanTotal(meo);
  return {AllCompleted(leo) && AllCompleted(meo) && Within(a, kCase2Leo, kCase2Tol) &&
              Within(b, kCase2Meo, kCase2Tol),
          Fmt("LEO %.3f ms (232 +/- 2), MEO %.3f ms (205 +/- 2)", a * 1e3, b * 1e3)};
}

Outcome C4() {
  const LatencyReport r = scenarios::RunScenario(Load("relay_geo.json"));
  const double total = MeanTotal(r);
  const g::GroundSite site{45.0, 0.0};
  const auto geo = g::CircularOrbit::Geostationary(0.0);
  const double leg = 2 * g::OneWayLatencyS(
                             g::DistanceKm(g::GroundPosition(site, 0), g::SatellitePosition(geo, 0)));
  return {AllCompleted(r) && Within(total, kRelay, kRelay * kRelayRelTol) &&
              Within(leg, kGeoGroundLeg, kGeoGroundLeg * kGeoGroundRelTol),
          Fmt("total %.3f ms (492 +/- 5%%), GEO-ground leg %.3f ms at 45 deg (260 +/- 15%%)",
              total * 1e3, leg * 1e3)};
}

Outcome C5() {
  const LatencyReport low = scenarios::RunScenario(Load("delayed_ground.json"));
  const LatencyReport high = scenarios::RunScenario(Load("delayed_ground_2000km.json"));
  const double a = MeanTotal(low), b = MeanTotal(high);
  const bool pass_a = AllCompleted(low) && Within(a, kRtt160, kRttTol);
  const bool pass_b = AllCompleted(high) && Within(b, kRtt2000, kRttTol);
  return {pass_a && pass_b,
          Fmt("160 km RTT %.4f ms (1 +/- 0.5) %s, 2000 km RTT %.4f ms (14 +/- 0.5) %s; "
              "overhead pass is the minimum slant range",
              a * 1e3, pass_a ? "ok" : "out", b * 1e3, pass_b ? "ok" : "out")};
}

Outcome C6() {
  const Scenario s = Load("comparison.json");
  const scenarios::SchemeId schemes[] = {
      scenarios::SchemeId::kSpcpkiLocal, scenarios::SchemeId::kIpkiCase1,
      scenarios::SchemeId::kIpkiCase2, scenarios::SchemeId::kRelayGeo};
  const auto cmp = scenarios::CompareSchemes(s, schemes);
  double m[4];
  bool complete = true;
  for (int i = 0; i < 4; ++i) {
    m[i] = MeanTotal(cmp.reports[i]);
    complete = complete && AllCompleted(cmp.reports[i]);
  }
  return {complete && m[0] <= m[1] && m[1] <= m[2] && m[2] < m[3],
          Fmt("SPCPKI_LOCAL %.3f <= IPKI_CASE1 %.3f <= IPKI_CASE2 %.3f < RELAY_GEO %.3f ms",
              m[0] * 1e3, m[1] * 1e3, m[2] * 1e3, m[3] * 1e3)};
}

struct RevisitGeometry {
  g::NodeGeometry sat;
  g::NodeGeometry site;
  g::LinkOptions link;
  g::WindowSearchOptions search;
};

RevisitGeometry Revisit() {
  const Scenario s = Load("delayed_ground_revisit.json");
  return {s.FindNode("rp-1")->geometry, s.FindNode("ground-va")->geometry, s.options.link,
          s.options.search};
}

Outcome C7() {
  const double gps = g::OrbitalPeriod(20200);
  const double leo = g::OrbitalPeriod(500);
  const RevisitGeometry rg = Revisit();
  const double horizon = 86400.0;
  const auto windows = g::VisibilityWindows(rg.sat, rg.site, 0, horizon, rg.link, rg.search);
  double shortest = 1e300, longest = 0;
  int counted = 0;
  for (const auto& w : windows) {
    if (w.start_s <= 0 || w.end_s >= horizon) continue;  // clipped by the horizon
    shortest = std::min(shortest, w.DurationS());
    longest = std::max(longest, w.DurationS());
    ++counted;
  }
  const bool periods = Within(gps, kGpsPeriodS, kGpsPeriodS * kGpsPeriodRelTol) &&
                       leo >= kLeoPeriodMinS && leo <= kLeoPeriodMaxS;
  const bool passes = counted > 0 && shortest >= kPassMinS && longest <= kPassMaxS;
  return {periods && passes,
          Fmt("period(20200 km) %.2f h (12 +/- 2%%), period(500 km) %.2f min (90-120), "
              "%d passes over 24 h lasting %.2f-%.2f min (5-12)",
              gps / 3600, leo / 60, counted, shortest / 60, longest / 60)};
}

Outcome C8() {
  const auto start = Clock::now();
  const RevisitGeometry rg = Revisit();
  const double horizon = 7 * 86400.0;
  const auto windows = g::VisibilityWindows(rg.sat, rg.site, 0, horizon, rg.link, rg.search);
  double max_gap = windows.empty() ? horizon : windows.front().start_s;
  for (std::size_t i = 1; i < windows.size(); ++i) {
    max_gap = std::max(max_gap, windows[i].start_s - windows[i - 1].end_s);
  }
  const double runtime = Seconds(start);
  return {!windows.empty() && max_gap <= kMaxRevisitGapS && runtime < kRevisitRuntimeS,
          Fmt("%zu windows in 7 d, max gap %.2f h (<= 25), runtime %.2f s (< %.0f)",
              windows.size(), max_gap / 3600, runtime, kRevisitRuntimeS)};
}

Outcome C9() {
  std::mt19937_64 rng(20240901);
  int path_mismatch = 0, status_mismatch = 0, chains = 0;
  for (int i = 0; i < kTrustWorlds; ++i) {
    const auto w = testing::MakeRandomTrustWorld(rng, kTrustMaxCerts);
    const auto paths = trust::DiscoverPaths(w.graph, w.target, w.anchor, kTrustMaxDepth);
    if (paths != testing::BruteForcePaths(w.graph, w.target, w.anchor, kTrustMaxDepth)) {
      ++path_mismatch;
    }
    const trust::ValidationOptions opts{.staleness_limit_s = w.staleness_limit_s};
    for (const auto& chain : paths) {
      ++chains;
      const auto got = trust::ValidateChain(chain, w.now_s, w.crls, w.ctx, opts).status;
      const auto want = testing::ExpectedStatus(
          testing::RecomputeChecks(chain, w.now_s, w.crls, w.ctx, w.staleness_limit_s));
      if (got != want) ++status_mismatch;
    }
  }
  return {path_mismatch == 0 && status_mismatch == 0 && chains > 0,
          Fmt("%d graphs: %d path-set mismatches, %d of %d chain verdicts differ", kTrustWorlds,
              path_mismatch, status_mismatch, chains)};
}

Outcome C10() {
  const Scenario s = Load("bridge_revocation.json");
  // Static check on the issued material: PKI-1 policy, bridge anchor.
  const scenarios::World world = scenarios::BuildWorld(s);
  trust::TrustGraph graph;
  graph.AddAnchor(world.Bridge().certificate);
  graph.AddAll(world.ipki_certificates);
  const auto& target = *world.nodes.at("sat-a").ipki_cert;
  const auto& rp = *world.nodes.at("rp-1").ipki_cert;
  trust::PolicyContext ctx;
  ctx.required_policies = rp.policy_ids;
  ctx.mapping_table = world.mapping_table;
  ctx.publisher_key = world.Bridge().certificate.subject_public_key;
  const auto crls = world.IpkiCrls();
  const auto before = trust::ValidateTarget(graph, target, world.Bridge().certificate, 0.5,
                                            crls, ctx);

  // Dynamic check: revocation mid-run, 10 ms request grid, no RP cache.
  const LatencyReport r = scenarios::RunScenario(s);
  const double revoked_at = s.trust.revocations.at(0).at_s;
  double sync_delay = -1;
  for (const auto& t : r.trace) {
    if (t.kind == "message-delivery" && t.note == "repository-update" &&
        sim::ToSeconds(t.time) >= revoked_at && t.to.starts_with("SPC_VA")) {
      sync_delay = sim::ToSeconds(t.time) - revoked_at;
      break;
    }
  }
  double case_latency = 0;
  const sim::LatencyRecord* flip = nullptr;
  bool monotone = true;
  for (const auto& rec : r.records) {
    case_latency = std::max(case_latency, sim::ToSeconds(rec.Total()));
    if (rec.status == trust::ValidationStatus::kRevoked) {
      if (flip == nullptr) flip = &rec;
    } else if (flip != nullptr) {
      monotone = false;
    }
  }
  const double flip_latency = flip ? sim::ToSeconds(flip->t_completed) - revoked_at : -1;
  const bool pass = before.ok() && before.path.size() == 4 && flip != nullptr && monotone &&
                    sync_delay >= 0 && flip_latency <= sync_delay + case_latency;
  return {pass, Fmt("before: %s path %zu; flip REVOKED %.3f ms after revocation "
                    "(<= sync %.3f + case %.3f ms), %s",
                    std::string(trust::StatusName(before.status)).c_str(), before.path.size(),
                    flip_latency * 1e3, sync_delay * 1e3, case_latency * 1e3,
                    monotone ? "no VALID after flip" : "VALID after flip")};
}

Outcome C11() {
  const Scenario s = Load("relay_queuing.json");
  const LatencyReport r = scenarios::RunScenario(s);
  const auto queued = std::count_if(r.records.begin(), r.records.end(),
                                    [](const auto& rec) { return rec.cost.queuing > 0; });
  int in_service = 0, peak = 0;
  for (const auto& t : r.trace) {
    if (t.kind == "relay-service-start") peak = std::max(peak, ++in_service);
    if (t.kind == "relay-service-end") --in_service;
  }
  const bool setup = r.records.size() == static_cast<std::size_t>(kRelayRequests) &&
                     s.options.relay.capacity_slots == kRelayCapacity;
  return {setup && queued >= kMinQueued && peak <= kRelayCapacity,
          Fmt("%zu requests, capacity %d: %ld queued (>= 5), peak in service %d (<= 20)",
              r.records.size(), s.options.relay.capacity_slots, static_cast<long>(queued), peak)};
}

Outcome C12() {
  const Scenario s = Load("comparison.json");
  const auto a = scenarios::CompareSchemes(s, scenarios::kAllSchemes);
  const auto b = scenarios::CompareSchemes(s, scenarios::kAllSchemes);
  int equal = 0;
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    if (a.reports[i].trace_digest == b.reports[i].trace_digest &&
        sim::ToNdjson(a.reports[i].trace) == sim::ToNdjson(b.reports[i].trace)) {
      ++equal;
    }
  }
  return {equal == static_cast<int>(a.reports.size()),
          Fmt("%d of %zu schemes produce byte-identical traces across two runs", equal,
              a.reports.size())};
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> all = {
      {1, "golden latency iPKI Case 1 LEO->MEO", C1},
      {2, "golden latency iPKI Case 1 MEO->MEO", C2},
      {3, "golden latency iPKI Case 2 LEO and MEO", C3},
      {4, "golden latency GEO relay", C4},
      {5, "golden latency direct LEO-ground", C5},
      {6, "scheme ordering", C6},
      {7, "orbital sanity", C7},
      {8, "revisit bound", C8},
      {9, "trust-oracle equivalence", C9},
      {10, "bridge interoperability and revocation flip", C10},
      {11, "relay queuing", C11},
      {12, "determinism", C12},
  };
  return all;
}

}  // namespace
}  // namespace orbitpki::acceptance

int main(int argc, char** argv) {
  using orbitpki::acceptance::Criteria;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  int failures = 0;
  for (const auto& c : Criteria()) {
    if (only != 0 && c.number != only) continue;
    orbitpki::acceptance::Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] C%02d %s: %s\n", o.pass ? "PASS" : "FAIL", c.number, c.name,
                o.detail.c_str());
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
