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

#include "orbitpki/actors/actor_id.h"

#include <array>
#include <charconv>
#include <utility>

#include "orbitpki/error.h"

namespace orbitpki::actors {

namespace {

constexpr std::array<std::pair<Role, std::string_view>, 9> kRoleNames = {{
    {Role::kGrdCa, "GRD_CA"},
    {Role::kGrdPca, "GRD_PCA"},
    {Role::kGrdBca, "GRD_BCA"},
    {Role::kSpcCa, "SPC_CA"},
    {Role::kSpcVa, "SPC_VA"},
    {Role::kSpcRp, "SPC_RP"},
    {Role::kRepository, "REPOSITORY"},
    {Role::kRelay, "RELAY"},
    {Role::kGroundStation, "GROUND_STATION"},
}};

}  // namespace

std::string_view RoleName(Role role) {
  for (const auto& [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "UNKNOWN";
}

Role ParseRole(std::string_view name) {
  for (const auto& [r, n] : kRoleNames) {
    if (n == name) return r;
  }
  throw Error(ErrorCode::kParse, "unknown actor role '" + std::string(name) +
                                     "'");
}

std::string ActorId::ToString() const {
  return std::string(RoleName(role)) + "#" + std::to_string(index);
}

ActorId ParseActorId(std::string_view text) {
  const auto hash = text.find('#');
  if (hash == std::string_view::npos) {
    throw Error(ErrorCode::kParse,
                "actor id '" + std::string(text) + "' lacks '#index'");
  }
  ActorId id;
  id.role = ParseRole(text.substr(0, hash));
  const auto digits = text.substr(hash + 1);
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), id.index);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      id.index < 0) {
    throw Error(ErrorCode::kParse,
                "bad actor index in '" + std::string(text) + "'");
  }
  return id;
}

}  // namespace orbitpki::actors
