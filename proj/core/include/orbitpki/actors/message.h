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

#ifndef ORBITPKI_ACTORS_MESSAGE_H_
#define ORBITPKI_ACTORS_MESSAGE_H_

#include <cstdint>
#include <memory>
#include <string_view>
#include <variant>

#include "orbitpki/actors/messages.h"
#include "orbitpki/actors/repository.h"

namespace orbitpki::actors {

// Validator -> remote repository replica.
struct RepositoryQueryMsg {
  std::uint64_t query_id = 0;
};

// Replica -> validator. The snapshot is immutable and shared.
struct RepositoryResponseMsg {
  std::uint64_t query_id = 0;
  std::shared_ptr<const RepositoryState> snapshot;
};

struct RepositoryAckMsg {
  ActorId replica;
  std::uint64_t version = 0;
};

// Spc-CA -> space entities whenever its CRL changes.
struct CrlBroadcastMsg {
  ActorId publisher;
  pki::RevocationList crl;
};

using Message =
    std::variant<ValidationRequestMsg, ValidationResponseMsg,
                 RepositoryUpdateMsg, RepositoryQueryMsg,
                 RepositoryResponseMsg, RepositoryAckMsg, CrlBroadcastMsg>;

// "validation-request", "repository-update", ...
std::string_view MessageKind(const Message& msg);

}  // namespace orbitpki::actors

#endif  // ORBITPKI_ACTORS_MESSAGE_H_
