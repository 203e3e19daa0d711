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

#include "orbitpki/sim/engine.h"

#include <algorithm>

#include "orbitpki/error.h"

namespace orbitpki::sim {

std::string_view EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kMessageDelivery:
      return "message-delivery";
    case EventKind::kTimer:
      return "timer";
    case EventKind::kWindowOpen:
      return "window-open";
    case EventKind::kWindowClose:
      return "window-close";
  }
  return "unknown";
}

struct Engine::Transit {
  ActorId from;
  ActorId to;
  std::optional<ActorId> relay;
  bool past_relay = false;
  actors::Message payload;
  std::uint64_t request_id = 0;
  SimTime sent = 0;
  LegCost cost;
};

Engine::Engine(EngineOptions options) : options_(std::move(options)) {}

void Engine::AddNode(const ActorId& id, geometry::NodeGeometry geometry,
                     double processing_s) {
  if (processing_s < 0.0) {
    throw Error(ErrorCode::kDomain, "negative processing delay for " +
                                        id.ToString());
  }
  nodes_[id] = Node{std::move(geometry), FromSeconds(processing_s)};
}

void Engine::AddRelay(const ActorId& id, geometry::NodeGeometry geometry,
                      RelayConfig config) {
  if (config.capacity_slots <= 0 || config.slot_service_s <= 0.0) {
    throw Error(ErrorCode::kDomain,
                "relay " + id.ToString() + " needs positive capacity and slot");
  }
  AddNode(id, std::move(geometry));
  Relay relay;
  relay.slot = FromSeconds(config.slot_service_s);
  relay.config = std::move(config);
  relays_[id] = std::move(relay);
}

bool Engine::HasNode(const ActorId& id) const { return nodes_.contains(id); }

const Engine::Node& Engine::NodeAt(const ActorId& id) const {
  const auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    throw Error(ErrorCode::kRouting, "unknown actor " + id.ToString());
  }
  return it->second;
}

const geometry::NodeGeometry& Engine::Geometry(const ActorId& id) const {
  return NodeAt(id).geometry;
}

void Engine::SetHandler(const ActorId& id, Handler handler) {
  handlers_[id] = std::move(handler);
}

void Engine::SetDropHandler(Handler handler) {
  drop_handler_ = std::move(handler);
}

EventHandle Engine::Schedule(SimTime at, EventKind kind,
                             std::function<void()> action) {
  if (at < now_) {
    throw Error(ErrorCode::kScheduling,
                "event at " + std::to_string(at) + " ns is before the clock (" +
                    std::to_string(now_) + " ns)");
  }
  const std::uint64_t seq = next_seq_++;
  queue_.push(Event{at, seq, kind, std::move(action)});
  pending_.insert(seq);
  return EventHandle{seq};
}

EventHandle Engine::ScheduleTimer(SimTime at, std::function<void()> action,
                                  std::string note) {
  return Schedule(at, EventKind::kTimer,
                  [this, action = std::move(action), note = std::move(note)] {
                    Record("timer", nullptr, nullptr, std::nullopt, note);
                    action();
                  });
}

bool Engine::Cancel(EventHandle handle) {
  if (pending_.erase(handle.seq) == 0) return false;
  cancelled_.insert(handle.seq);
  return true;
}

void Engine::Record(std::string kind, const ActorId* from, const ActorId* to,
                    std::optional<std::uint64_t> request_id, std::string note) {
  trace_.push_back(TraceRecord{now_, current_seq_, std::move(kind),
                               from ? from->ToString() : std::string(),
                               to ? to->ToString() : std::string(), request_id,
                               std::move(note)});
}

bool Engine::Visible(const ActorId& a, const ActorId& b, SimTime t) const {
  if (a == b) return true;
  const auto& ga = NodeAt(a).geometry;
  const auto& gb = NodeAt(b).geometry;
  // Ground sites talk over terrestrial links.
  if (geometry::IsGround(ga) && geometry::IsGround(gb)) return true;
  return geometry::HasLineOfSight(ga, gb, ToSeconds(t), options_.link);
}

double Engine::DistanceKm(const ActorId& a, const ActorId& b, SimTime t) const {
  const double ts = ToSeconds(t);
  return geometry::DistanceKm(geometry::PositionAt(NodeAt(a).geometry, ts),
                              geometry::PositionAt(NodeAt(b).geometry, ts));
}

void Engine::Send(const ActorId& from, const ActorId& to,
                  actors::Message payload, std::uint64_t request_id) {
  NodeAt(from);
  NodeAt(to);
  auto transit = std::make_shared<Transit>();
  transit->from = from;
  transit->to = to;
  transit->payload = std::move(payload);
  transit->request_id = request_id;
  transit->sent = now_;
  ++in_flight_;
  StartLeg(std::move(transit), from, to, now_);
}

void Engine::SendViaRelay(const ActorId& from, const ActorId& relay,
                          const ActorId& to, actors::Message payload,
                          std::uint64_t request_id) {
  NodeAt(from);
  NodeAt(to);
  if (!relays_.contains(relay)) {
    throw Error(ErrorCode::kRouting, relay.ToString() + " is not a relay");
  }
  auto transit = std::make_shared<Transit>();
  transit->from = from;
  transit->to = to;
  transit->relay = relay;
  transit->payload = std::move(payload);
  transit->request_id = request_id;
  transit->sent = now_;
  ++in_flight_;
  StartLeg(std::move(transit), from, relay, now_);
}

void Engine::StartLeg(std::shared_ptr<Transit> transit, const ActorId& from,
                      const ActorId& to, SimTime waiting_since) {
  const bool to_relay = transit->relay && !transit->past_relay;
  if (!Visible(from, to, now_)) {
    const double now_s = ToSeconds(now_);
    const auto window = geometry::NextVisibilityWindow(
        NodeAt(from).geometry, NodeAt(to).geometry, now_s,
        now_s + options_.window_horizon_s, options_.link, options_.search);
    if (!window) {
      Record("stalled", &from, &to, transit->request_id,
             std::string(actors::MessageKind(transit->payload)));
      return;
    }
    const SimTime at = std::max(CeilFromSeconds(window->start_s), now_ + 1);
    Schedule(at, EventKind::kWindowOpen,
             [this, transit, from, to, waiting_since] {
               Record("window-open", &from, &to, transit->request_id);
               StartLeg(transit, from, to, waiting_since);
             });
    return;
  }

  const bool terrestrial = from == to || (geometry::IsGround(NodeAt(from).geometry) &&
                                          geometry::IsGround(NodeAt(to).geometry));
  const double distance_km = terrestrial ? 0.0 : DistanceKm(from, to, now_);
  const SimTime propagation =
      terrestrial ? 0 : FromSeconds(geometry::OneWayLatencyS(distance_km));
  const SimTime processing = to_relay ? 0 : NodeAt(to).processing;
  transit->cost.wait_visibility += now_ - waiting_since;
  transit->cost.propagation += propagation;
  transit->cost.processing += processing;
  transit->cost.hops.push_back(Hop{from, to, distance_km});
  Record("transmit", &from, &to, transit->request_id,
         std::string(actors::MessageKind(transit->payload)));
  Schedule(now_ + propagation + processing, EventKind::kMessageDelivery,
           [this, transit, to_relay] {
             if (to_relay) {
               ArriveAtRelay(transit);
             } else {
               Deliver(transit);
             }
           });
}

void Engine::ArriveAtRelay(std::shared_ptr<Transit> transit) {
  const ActorId relay_id = *transit->relay;
  Relay& relay = relays_.at(relay_id);
  Record("relay-arrival", &transit->from, &relay_id, transit->request_id);
  if (relay.in_service < relay.config.capacity_slots) {
    StartService(relay_id, std::move(transit), now_);
    return;
  }
  if (relay.config.max_queue && relay.queue.size() >= *relay.config.max_queue) {
    --in_flight_;
    ++drops_;
    Record("drop", &relay_id, &transit->to, transit->request_id,
           "queue full");
    if (drop_handler_) {
      drop_handler_(Delivery{transit->from, transit->to, transit->payload,
                             transit->request_id, transit->sent, now_,
                             transit->cost});
    }
    return;
  }
  relay.queue.emplace_back(std::move(transit), now_);
}

void Engine::StartService(const ActorId& relay_id,
                          std::shared_ptr<Transit> transit, SimTime arrived) {
  Relay& relay = relays_.at(relay_id);
  ++relay.in_service;
  relay.peak_in_service = std::max(relay.peak_in_service, relay.in_service);
  transit->cost.queuing += now_ - arrived;
  transit->past_relay = true;
  Record("relay-service-start", &relay_id, &transit->to, transit->request_id,
         "in_service=" + std::to_string(relay.in_service));
  const std::uint64_t request_id = transit->request_id;
  const ActorId to = transit->to;
  Schedule(now_ + relay.slot, EventKind::kTimer, [this, relay_id, request_id, to] {
    Relay& r = relays_.at(relay_id);
    --r.in_service;
    Record("relay-service-end", &relay_id, &to, request_id,
           "in_service=" + std::to_string(r.in_service));
    if (!r.queue.empty()) {
      auto [next, arrived_at] = std::move(r.queue.front());
      r.queue.pop_front();
      StartService(relay_id, std::move(next), arrived_at);
    }
  });
  StartLeg(std::move(transit), relay_id, to, now_);
}

void Engine::Deliver(std::shared_ptr<Transit> transit) {
  --in_flight_;
  Record("message-delivery", &transit->from, &transit->to, transit->request_id,
         std::string(actors::MessageKind(transit->payload)));
  const auto it = handlers_.find(transit->to);
  if (it == handlers_.end()) return;
  it->second(Delivery{transit->from, transit->to, transit->payload,
                      transit->request_id, transit->sent, now_,
                      transit->cost});
}

RunStats Engine::RunUntil(SimTime t_end) {
  if (t_end < now_) {
    throw Error(ErrorCode::kScheduling, "run_until target is in the past");
  }
  RunStats stats;
  while (!queue_.empty() && queue_.top().time <= t_end) {
    Event event = queue_.top();
    queue_.pop();
    if (cancelled_.erase(event.seq) > 0) continue;
    pending_.erase(event.seq);
    now_ = event.time;
    current_seq_ = event.seq;
    event.action();
    ++stats.events_processed;
  }
  now_ = t_end;
  stats.messages_in_flight = in_flight_;
  stats.drops = drops_;
  return stats;
}

int Engine::RelayInService(const ActorId& relay) const {
  return relays_.at(relay).in_service;
}

int Engine::RelayPeakInService(const ActorId& relay) const {
  return relays_.at(relay).peak_in_service;
}

}  // namespace orbitpki::sim
