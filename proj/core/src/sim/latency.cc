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

#include "orbitpki/sim/latency.h"

#include "orbitpki/error.h"

namespace orbitpki::sim {

LegCost& LegCost::operator+=(const LegCost& other) {
  wait_visibility += other.wait_visibility;
  propagation += other.propagation;
  queuing += other.queuing;
  processing += other.processing;
  hops.insert(hops.end(), other.hops.begin(), other.hops.end());
  return *this;
}

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kCompleted:
      return "completed";
    case Outcome::kDropped:
      return "dropped";
    case Outcome::kPending:
      return "pending";
  }
  return "unknown";
}

Outcome ParseOutcome(std::string_view name) {
  for (Outcome o : {Outcome::kCompleted, Outcome::kDropped, Outcome::kPending}) {
    if (OutcomeName(o) == name) return o;
  }
  throw Error(ErrorCode::kParse, "unknown outcome '" + std::string(name) + "'");
}

}  // namespace orbitpki::sim
