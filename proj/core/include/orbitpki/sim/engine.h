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

#ifndef ORBITPKI_SIM_ENGINE_H_
#define ORBITPKI_SIM_ENGINE_H_

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "orbitpki/actors/actor_id.h"
#include "orbitpki/actors/message.h"
#include "orbitpki/geometry/orbit.h"
#include "orbitpki/geometry/visibility.h"
#include "orbitpki/sim/latency.h"
#include "orbitpki/sim/time.h"
#include "orbitpki/sim/trace.h"

namespace orbitpki::sim {

using actors::ActorId;

enum class EventKind { kMessageDelivery, kTimer, kWindowOpen, kWindowClose };
std::string_view EventKindName(EventKind kind);

struct EventHandle {
  std::uint64_t seq = 0;
};

struct RelayConfig {
  int capacity_slots = 20;
  double slot_service_s = 0.1;
  // Unbounded when empty.
  std::optional<std::size_t> max_queue;
};

struct EngineOptions {
  geometry::LinkOptions link;
  geometry::WindowSearchOptions search;
  // How far ahead store-and-wait looks for a window before giving up.
  double window_horizon_s = 8.0 * 86400.0;
};

struct Delivery {
  ActorId from;  // original sender, not the relay
  ActorId to;
  actors::Message payload;
  std::uint64_t request_id = 0;
  SimTime sent = 0;  // when the sender handed the message over
  SimTime delivered = 0;
  // delivered - sent == cost.Total().
  LegCost cost;
};

using Handler = std::function<void(const Delivery&)>;

struct RunStats {
  std::uint64_t events_processed = 0;
  std::uint64_t messages_in_flight = 0;
  std::uint64_t drops = 0;
};

// Deterministic discrete-event engine. Events are ordered by (time, seq);
// seq is assigned when an event is scheduled.
class Engine {
 public:
  explicit Engine(EngineOptions options = {});
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  // Processing delay is charged when a message reaches `id`.
  void AddNode(const ActorId& id, geometry::NodeGeometry geometry,
               double processing_s = 0.0);
  void AddRelay(const ActorId& id, geometry::NodeGeometry geometry,
                RelayConfig config = {});
  bool HasNode(const ActorId& id) const;
  const geometry::NodeGeometry& Geometry(const ActorId& id) const;

  void SetHandler(const ActorId& id, Handler handler);
  // Called for messages dropped by a relay.
  void SetDropHandler(Handler handler);

  SimTime now() const { return now_; }

  // Throws Error(kScheduling) when `at` is before now().
  EventHandle ScheduleTimer(SimTime at, std::function<void()> action,
                            std::string note = {});
  // Returns false when the event already fired or was cancelled.
  bool Cancel(EventHandle handle);

  // Direct link. Departs now when the endpoints see each other, otherwise at
  // the start of the next visibility window. Throws Error(kRouting) for
  // unknown endpoints.
  void Send(const ActorId& from, const ActorId& to, actors::Message payload,
            std::uint64_t request_id);
  // from -> relay, FIFO slot service, relay -> to.
  void SendViaRelay(const ActorId& from, const ActorId& relay,
                    const ActorId& to, actors::Message payload,
                    std::uint64_t request_id);

  // Processes every event with time <= t_end and advances the clock to
  // t_end. Throws Error(kScheduling) when t_end is before now().
  RunStats RunUntil(SimTime t_end);

  bool Visible(const ActorId& a, const ActorId& b, SimTime t) const;
  double DistanceKm(const ActorId& a, const ActorId& b, SimTime t) const;

  const std::vector<TraceRecord>& trace() const { return trace_; }
  int RelayInService(const ActorId& relay) const;
  int RelayPeakInService(const ActorId& relay) const;

 private:
  struct Event {
    SimTime time = 0;
    std::uint64_t seq = 0;
    EventKind kind = EventKind::kTimer;
    std::function<void()> action;
  };
  struct EventOrder {
    bool operator()(const Event& a, const Event& b) const {
      return std::tie(a.time, a.seq) > std::tie(b.time, b.seq);
    }
  };
  struct Transit;
  struct Node {
    geometry::NodeGeometry geometry;
    SimTime processing = 0;
  };
  struct Relay {
    RelayConfig config;
    SimTime slot = 0;
    int in_service = 0;
    int peak_in_service = 0;
    std::deque<std::pair<std::shared_ptr<Transit>, SimTime>> queue;
  };

  EventHandle Schedule(SimTime at, EventKind kind, std::function<void()> action);
  void Record(std::string kind, const ActorId* from, const ActorId* to,
              std::optional<std::uint64_t> request_id, std::string note = {});
  const Node& NodeAt(const ActorId& id) const;
  void StartLeg(std::shared_ptr<Transit> transit, const ActorId& from,
                const ActorId& to, SimTime waiting_since);
  void ArriveAtRelay(std::shared_ptr<Transit> transit);
  void StartService(const ActorId& relay_id, std::shared_ptr<Transit> transit,
                    SimTime arrived);
  void Deliver(std::shared_ptr<Transit> transit);

  EngineOptions options_;
  SimTime now_ = 0;
  std::uint64_t next_seq_ = 1;
  std::uint64_t current_seq_ = 0;
  std::priority_queue<Event, std::vector<Event>, EventOrder> queue_;
  std::set<std::uint64_t> cancelled_;
  std::set<std::uint64_t> pending_;
  std::map<ActorId, Node> nodes_;
  std::map<ActorId, Relay> relays_;
  std::map<ActorId, Handler> handlers_;
  Handler drop_handler_;
  std::vector<TraceRecord> trace_;
  std::uint64_t in_flight_ = 0;
  std::uint64_t drops_ = 0;
};

}  // namespace orbitpki::sim

#endif  // ORBITPKI_SIM_ENGINE_H_
