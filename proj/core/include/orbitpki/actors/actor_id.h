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

#ifndef ORBITPKI_ACTORS_ACTOR_ID_H_
#define ORBITPKI_ACTORS_ACTOR_ID_H_

#include <compare>
#include <string>
#include <string_view>

namespace orbitpki::actors {

enum class Role {
  kGrdCa,
  kGrdPca,
  kGrdBca,
  kSpcCa,
  kSpcVa,
  kSpcRp,
  kRepository,
  kRelay,
  kGroundStation,
};

// "GRD_CA", "SPC_VA", ...
std::string_view RoleName(Role role);
// Throws Error(kParse) on unknown names.
Role ParseRole(std::string_view name);

struct ActorId {
  Role role = Role::kSpcRp;
  int index = 0;

  // "SPC_VA#0".
  std::string ToString() const;
  auto operator<=>(const ActorId&) const = default;
};

// Inverse of ActorId::ToString.
ActorId ParseActorId(std::string_view text);

}  // namespace orbitpki::actors

#endif  // ORBITPKI_ACTORS_ACTOR_ID_H_
