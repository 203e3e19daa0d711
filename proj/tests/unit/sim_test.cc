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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "orbitpki/actors/message.h"
#include "orbitpki/error.h"
#include "orbitpki/geometry/orbit.h"
#include "orbitpki/geometry/visibility.h"
#include "orbitpki/sim/engine.h"
#include "orbitpki/sim/latency.h"
#include "orbitpki/sim/time.h"
#include "orbitpki/sim/trace.h"

namespace orbitpki::sim {
namespace {

using actors::ActorId;
using actors::Role;
using geometry::CircularOrbit;
using geometry::GroundSite;

constexpr double kSpeedOfLightKmS = 299792.0;

const ActorId kRp{Role::kSpcRp, 0};
const ActorId kRp2{Role::kSpcRp, 1};
const ActorId kVa{Role::kSpcVa, 0};
const ActorId kRelay{Role::kRelay, 0};
const ActorId kGround{Role::kGroundStation, 0};
const ActorId kBca{Role::kGrdBca, 0};

CircularOrbit Orbit(double altitude_km, double phase_deg,
                    double inclination_deg = 0.0) {
  CircularOrbit o;
  o.altitude_km = altitude_km;
  o.phase_deg = phase_deg;
  o.inclination_deg = inclination_deg;
  return o;
}

actors::Message Query(std::uint64_t id) {
  return actors::RepositoryQueryMsg{id};
}

// Hand computation: |r_a - r_b| / c with positions from first principles
// for equatorial orbits at phase 0 and t = 0.
double AlignedOneWayS(double alt_a_km, double alt_b_km) {
  return std::abs(alt_a_km - alt_b_km) / kSpeedOfLightKmS;
}

TEST(SimTimeTest, SecondsRoundTripAtNanosecondResolution) {
  EXPECT_EQ(FromSeconds(1.5), 1'500'000'000);
  EXPECT_EQ(CeilFromSeconds(1e-10), 1);
  EXPECT_EQ(FormatSeconds(FromSeconds(0.060041651)), "0.060041651");
  EXPECT_EQ(FormatSeconds(-FromSeconds(2.25)), "-2.250000000");
  for (SimTime t : {SimTime{0}, SimTime{1}, SimTime{123456789012345}, SimTime{-7}}) {
    EXPECT_EQ(ParseSeconds(FormatSeconds(t)), t);
  }
  EXPECT_THROW(ParseSeconds("12.x"), Error);
}

TEST(EngineTest, TimersRunInTimeOrderWithSchedulingTieBreak) {
  Engine engine;
  std::vector<int> order;
  engine.ScheduleTimer(FromSeconds(2.0), [&] { order.push_back(3); });
  engine.ScheduleTimer(FromSeconds(1.0), [&] { order.push_back(1); });
  engine.ScheduleTimer(FromSeconds(1.0), [&] { order.push_back(2); });
  engine.ScheduleTimer(FromSeconds(1.0), [&] {
    // Same-instant timer scheduled from inside a handler runs after the
    // timers already queued for that instant.
    engine.ScheduleTimer(engine.now(), [&] { order.push_back(5); });
    order.push_back(4);
  });
  const RunStats stats = engine.RunUntil(FromSeconds(10.0));
  EXPECT_EQ(order, (std::vector<int>{1, 2, 4, 5, 3}));
  EXPECT_EQ(stats.events_processed, 5u);
  EXPECT_EQ(engine.now(), FromSeconds(10.0));
}

TEST(EngineTest, CancelledTimerNeverFires) {
  Engine engine;
  int fired = 0;
  const EventHandle h = engine.ScheduleTimer(FromSeconds(1.0), [&] { ++fired; });
  engine.ScheduleTimer(FromSeconds(2.0), [&] { ++fired; });
  EXPECT_TRUE(engine.Cancel(h));
  EXPECT_FALSE(engine.Cancel(h));
  engine.RunUntil(FromSeconds(3.0));
  EXPECT_EQ(fired, 1);
}

TEST(EngineTest, RejectsThePast) {
  Engine engine;
  engine.RunUntil(FromSeconds(5.0));
  try {
    engine.ScheduleTimer(FromSeconds(4.0), [] {});
    FAIL() << "expected a scheduling error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kScheduling);
  }
  EXPECT_THROW(engine.RunUntil(FromSeconds(1.0)), Error);
}

TEST(EngineTest, UnknownEndpointIsARoutingError) {
  Engine engine;
  engine.AddNode(kRp, Orbit(1000, 0));
  try {
    engine.Send(kRp, kVa, Query(1), 1);
    FAIL() << "expected a routing error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRouting);
  }
}

TEST(EngineTest, DirectSendChargesDistanceOverC) {
  Engine engine;
  engine.AddNode(kRp, Orbit(1000, 0));
  engine.AddNode(kVa, Orbit(10000, 0));
  std::vector<Delivery> got;
  engine.SetHandler(kVa, [&](const Delivery& d) { got.push_back(d); });
  engine.Send(kRp, kVa, Query(7), 42);
  engine.RunUntil(FromSeconds(1.0));
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].request_id, 42u);
  EXPECT_EQ(got[0].sent, 0);
  EXPECT_NEAR(got[0].delivered, AlignedOneWayS(1000, 10000) * 1e9, 1.0);
  EXPECT_EQ(got[0].cost.wait_visibility, 0);
  ASSERT_EQ(got[0].cost.hops.size(), 1u);
  EXPECT_NEAR(got[0].cost.hops[0].distance_km, 9000.0, 1e-6);
  EXPECT_EQ(got[0].cost.Total(), got[0].delivered - got[0].sent);
}

TEST(EngineTest, ProcessingDelayChargedAtDestination) {
  Engine engine;
  engine.AddNode(kRp, Orbit(1000, 0));
  engine.AddNode(kVa, Orbit(10000, 0), 0.002);
  Delivery got;
  engine.SetHandler(kVa, [&](const Delivery& d) { got = d; });
  engine.Send(kRp, kVa, Query(1), 1);
  engine.RunUntil(FromSeconds(1.0));
  EXPECT_EQ(got.cost.processing, FromSeconds(0.002));
  EXPECT_NEAR(got.delivered, (AlignedOneWayS(1000, 10000) + 0.002) * 1e9, 1.0);
}

TEST(EngineTest, GroundToGroundAndSelfSendsAreInstant) {
  Engine engine;
  engine.AddNode(kBca, GroundSite{0, 0});
  engine.AddNode(kGround, GroundSite{45, 90});
  Delivery got;
  engine.SetHandler(kGround, [&](const Delivery& d) { got = d; });
  engine.RunUntil(FromSeconds(1.0));
  engine.Send(kBca, kGround, Query(1), 0);
  engine.RunUntil(FromSeconds(2.0));
  EXPECT_EQ(got.delivered, FromSeconds(1.0));
  EXPECT_EQ(got.cost.Total(), 0);
}

// Independent window oracle: first second at which the pair can see each
// other, found by stepping the line-of-sight predicate.
double FirstVisibleS(const geometry::NodeGeometry& a,
                     const geometry::NodeGeometry& b, double from_s,
                     double step_s, double limit_s) {
  for (double t = from_s; t <= limit_s; t += step_s) {
    if (geometry::HasLineOfSight(a, b, t)) return t;
  }
  return -1.0;
}

TEST(EngineTest, StoreAndWaitMatchesWindowOracle) {
  // LEO on the far side of the Earth from a ground station.
  const CircularOrbit leo = Orbit(500, 180);
  const GroundSite site{0, 0};
  Engine engine;
  engine.AddNode(kRp, leo);
  engine.AddNode(kGround, site);
  Delivery got;
  engine.SetHandler(kGround, [&](const Delivery& d) { got = d; });
  engine.Send(kRp, kGround, Query(1), 9);
  engine.RunUntil(FromSeconds(86400.0));

  const double oracle = FirstVisibleS(leo, site, 0.0, 0.5, 86400.0);
  ASSERT_GT(oracle, 0.0);
  const double wait = ToSeconds(got.cost.wait_visibility);
  EXPECT_GT(wait, oracle - 0.5);
  EXPECT_LE(wait, oracle + 0.2);
  // The departure instant sees the destination.
  EXPECT_TRUE(geometry::HasLineOfSight(leo, site, wait));
  EXPECT_EQ(got.cost.Total(), got.delivered - got.sent);
}

TEST(EngineTest, NoWindowStallsTheMessage) {
  // Polar site never sees an equatorial GEO slot.
  Engine engine({.window_horizon_s = 2 * 86400.0});
  engine.AddNode(kGround, GroundSite{89.0, 0});
  engine.AddNode(kRelay, CircularOrbit::Geostationary(0));
  int delivered = 0;
  engine.SetHandler(kRelay, [&](const Delivery&) { ++delivered; });
  engine.Send(kGround, kRelay, Query(1), 3);
  const RunStats stats = engine.RunUntil(FromSeconds(10.0));
  EXPECT_EQ(delivered, 0);
  EXPECT_EQ(stats.messages_in_flight, 1u);
  ASSERT_FALSE(engine.trace().empty());
  EXPECT_EQ(engine.trace().back().kind, "stalled");
}

struct RelayRun {
  std::vector<Delivery> deliveries;
  std::vector<Delivery> drops;
  RunStats stats;
  std::vector<TraceRecord> trace;
  int peak = 0;
};

// `n` requesters under a GEO relay send to a mid-latitude ground site at the
// same instant.
RelayRun RunRelay(int n, RelayConfig config) {
  Engine engine;
  engine.AddRelay(kRelay, CircularOrbit::Geostationary(0), config);
  engine.AddNode(kGround, GroundSite{45, 0});
  RelayRun run;
  engine.SetHandler(kGround, [&](const Delivery& d) { run.deliveries.push_back(d); });
  engine.SetDropHandler([&](const Delivery& d) { run.drops.push_back(d); });
  for (int i = 0; i < n; ++i) {
    const ActorId rp{Role::kSpcRp, i};
    engine.AddNode(rp, Orbit(1000, 0.1 * i));
  }
  engine.ScheduleTimer(FromSeconds(1.0), [&] {
    for (int i = 0; i < n; ++i) {
      engine.SendViaRelay({Role::kSpcRp, i}, kRelay, kGround, Query(i), i + 1);
    }
  });
  run.stats = engine.RunUntil(FromSeconds(30.0));
  run.trace = engine.trace();
  run.peak = engine.RelayPeakInService(kRelay);
  return run;
}

// FIFO slot oracle: with k slots of length s and all arrivals at once, the
// message served in position p waits floor(p / k) * s. Arrivals differ by
// microseconds here, so only the number of queued messages and the
// per-message waits are compared.
TEST(RelayTest, TwentyOneArrivalsQueueExactlyOne) {
  const RelayRun run = RunRelay(21, {});
  ASSERT_EQ(run.deliveries.size(), 21u);
  int queued = 0;
  for (const auto& d : run.deliveries) {
    if (d.cost.queuing > 0) {
      ++queued;
      EXPECT_NEAR(ToSeconds(d.cost.queuing), 0.1, 1e-3);
    }
  }
  EXPECT_EQ(queued, 1);
  EXPECT_EQ(run.peak, 20);
}

TEST(RelayTest, FortyArrivalsQueueTwenty) {
  const RelayRun run = RunRelay(40, {});
  ASSERT_EQ(run.deliveries.size(), 40u);
  const auto queued = std::count_if(run.deliveries.begin(), run.deliveries.end(),
                                    [](const Delivery& d) { return d.cost.queuing > 0; });
  EXPECT_EQ(queued, 20);
  EXPECT_EQ(run.peak, 20);
}

TEST(RelayTest, CapacityHoldsAtEveryInstantOfTheTrace) {
  const RelayRun run = RunRelay(45, {.capacity_slots = 20, .slot_service_s = 0.1});
  int in_service = 0;
  int peak = 0;
  for (const auto& r : run.trace) {
    if (r.kind == "relay-service-start") ++in_service;
    if (r.kind == "relay-service-end") --in_service;
    ASSERT_GE(in_service, 0);
    ASSERT_LE(in_service, 20) << "at " << FormatSeconds(r.time);
    peak = std::max(peak, in_service);
    if (r.kind.starts_with("relay-service")) {
      EXPECT_EQ(r.note, "in_service=" + std::to_string(in_service));
    }
  }
  EXPECT_EQ(peak, 20);
}

TEST(RelayTest, BoundedQueueDropsAndConservesMessages) {
  const RelayRun run =
      RunRelay(30, {.capacity_slots = 20, .slot_service_s = 0.1, .max_queue = 4});
  EXPECT_EQ(run.deliveries.size(), 24u);
  EXPECT_EQ(run.drops.size(), 6u);
  EXPECT_EQ(run.stats.drops, 6u);
  EXPECT_EQ(run.deliveries.size() + run.drops.size() + run.stats.messages_in_flight, 30u);
}

TEST(RelayTest, LegsAddUpToTheEndToEndDelay) {
  const RelayRun run = RunRelay(1, {});
  ASSERT_EQ(run.deliveries.size(), 1u);
  const Delivery& d = run.deliveries[0];
  ASSERT_EQ(d.cost.hops.size(), 2u);
  double expected = 0.0;
  for (const auto& hop : d.cost.hops) expected += hop.distance_km / kSpeedOfLightKmS;
  EXPECT_NEAR(ToSeconds(d.cost.propagation), expected, 2e-9);
  EXPECT_EQ(d.cost.Total(), d.delivered - d.sent);
}

struct TrafficRun {
  std::vector<TraceRecord> trace;
  std::vector<Delivery> deliveries;
  // Transmit records whose endpoints could not see each other.
  std::vector<std::string> ungated;
};

// Randomized traffic on a mixed constellation.
TrafficRun RandomTraffic(std::uint64_t seed) {
  Engine engine;
  TrafficRun run;
  std::mt19937_64 rng(seed);
  std::vector<ActorId> ids;
  for (int i = 0; i < 6; ++i) {
    const ActorId id{Role::kSpcRp, i};
    engine.AddNode(id, Orbit(500 + 300 * i, 60.0 * i, 30.0 * (i % 3)));
    ids.push_back(id);
  }
  engine.AddNode(kGround, GroundSite{10, 10});
  ids.push_back(kGround);
  engine.AddRelay(kRelay, CircularOrbit::Geostationary(10), {.capacity_slots = 3});
  for (const auto& id : ids) {
    engine.SetHandler(id, [&run](const Delivery& d) { run.deliveries.push_back(d); });
  }
  for (int k = 0; k < 60; ++k) {
    const double at = std::uniform_real_distribution<double>(0, 3000)(rng);
    const ActorId from = ids[rng() % ids.size()];
    const ActorId to = ids[rng() % ids.size()];
    const bool via_relay = rng() % 3 == 0;
    engine.ScheduleTimer(FromSeconds(at), [&engine, from, to, via_relay, k] {
      if (via_relay) {
        engine.SendViaRelay(from, kRelay, to, Query(k), k + 1);
      } else {
        engine.Send(from, to, Query(k), k + 1);
      }
    });
  }
  engine.RunUntil(FromSeconds(2 * 86400.0));
  run.trace = engine.trace();
  for (const auto& r : run.trace) {
    if (r.kind != "transmit") continue;
    if (!engine.Visible(actors::ParseActorId(r.from), actors::ParseActorId(r.to), r.time)) {
      run.ungated.push_back(r.from + " -> " + r.to + " at " + FormatSeconds(r.time));
    }
  }
  return run;
}

TEST(EnginePropertyTest, IdenticalInputsGiveIdenticalTraces) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto a = RandomTraffic(seed);
    const auto b = RandomTraffic(seed);
    EXPECT_EQ(ToNdjson(a.trace), ToNdjson(b.trace));
    EXPECT_EQ(TraceDigest(a.trace), TraceDigest(b.trace));
  }
  EXPECT_NE(TraceDigest(RandomTraffic(1).trace), TraceDigest(RandomTraffic(2).trace));
}

TEST(EnginePropertyTest, CausalityDecompositionAndGating) {
  for (std::uint64_t seed = 10; seed < 16; ++seed) {
    const TrafficRun run = RandomTraffic(seed);
    EXPECT_EQ(run.deliveries.size(), 60u) << "every message reaches its destination";
    for (const auto& d : run.deliveries) {
      EXPECT_GE(d.delivered, d.sent);
      EXPECT_EQ(d.cost.Total(), d.delivered - d.sent);
    }
    for (std::size_t i = 1; i < run.trace.size(); ++i) {
      ASSERT_LE(run.trace[i - 1].time, run.trace[i].time);
    }
    EXPECT_TRUE(run.ungated.empty()) << run.ungated.front();
  }
}

TEST(TraceTest, NdjsonRoundTripsAndKeepsKeyOrder) {
  TraceRecord r{FromSeconds(1.25), 17, "transmit", "SPC_RP#0", "SPC_VA#0", 3,
                "validation-request"};
  const std::string line = ToNdjsonLine(r);
  EXPECT_EQ(line,
            R"({"time_s":1.250000000,"seq":17,"kind":"transmit","from":"SPC_RP#0",)"
            R"("to":"SPC_VA#0","request_id":3,"note":"validation-request"})");
  const TraceRecord back = ParseNdjsonLine(line);
  EXPECT_EQ(back.time, r.time);
  EXPECT_EQ(back.seq, r.seq);
  EXPECT_EQ(back.kind, r.kind);
  EXPECT_EQ(back.request_id, r.request_id);
  EXPECT_EQ(back.note, r.note);
}

TEST(LatencyTest, DecompositionHoldsOnlyWhenComponentsAddUp) {
  LatencyRecord rec;
  rec.t_initiated = FromSeconds(1.0);
  rec.cost.propagation = FromSeconds(0.06);
  rec.cost.queuing = FromSeconds(0.1);
  rec.t_completed = rec.t_initiated + rec.cost.Total();
  EXPECT_TRUE(rec.DecompositionHolds());
  rec.t_completed += 1;
  EXPECT_FALSE(rec.DecompositionHolds());
  EXPECT_EQ(ParseOutcome(OutcomeName(Outcome::kDropped)), Outcome::kDropped);
}

}  // namespace
}  // namespace orbitpki::sim
