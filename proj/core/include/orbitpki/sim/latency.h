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

#ifndef ORBITPKI_SIM_LATENCY_H_
#define ORBITPKI_SIM_LATENCY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitpki/actors/actor_id.h"
#include "orbitpki/sim/time.h"
#include "orbitpki/trust/validator.h"

namespace orbitpki::sim {

struct Hop {
  actors::ActorId from;
  actors::ActorId to;
  double distance_km = 0.0;
  bool operator==(const Hop&) const = default;
};

// Cost of moving one message (or a sequence of messages) between actors.
struct LegCost {
  SimTime wait_visibility = 0;
  SimTime propagation = 0;
  SimTime queuing = 0;
  SimTime processing = 0;
  std::vector<Hop> hops;

  SimTime Total() const {
    return wait_visibility + propagation + queuing + processing;
  }
  LegCost& operator+=(const LegCost& other);
};

enum class Outcome { kCompleted, kDropped, kPending };
std::string_view OutcomeName(Outcome outcome);
Outcome ParseOutcome(std::string_view name);

struct LatencyRecord {
  std::uint64_t request_id = 0;
  std::string scheme;
  std::string requester;
  std::string target;
  SimTime t_initiated = 0;
  // Equals the time of the last accounted event for drops and pending.
  SimTime t_completed = 0;
  LegCost cost;
  Outcome outcome = Outcome::kPending;
  std::optional<trust::ValidationStatus> status;
  bool cache_hit = false;

  SimTime Total() const { return t_completed - t_initiated; }
  // t_completed - t_initiated == wait + propagation + queuing + processing.
  bool DecompositionHolds() const { return Total() == cost.Total(); }
};

}  // namespace orbitpki::sim

#endif  // ORBITPKI_SIM_LATENCY_H_
