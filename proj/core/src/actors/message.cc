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

#include "orbitpki/actors/message.h"

namespace orbitpki::actors {

namespace {

struct KindVisitor {
  std::string_view operator()(const ValidationRequestMsg&) const {
    return "validation-request";
  }
  std::string_view operator()(const ValidationResponseMsg&) const {
    return "validation-response";
  }
  std::string_view operator()(const RepositoryUpdateMsg&) const {
    return "repository-update";
  }
  std::string_view operator()(const RepositoryQueryMsg&) const {
    return "repository-query";
  }
  std::string_view operator()(const RepositoryResponseMsg&) const {
    return "repository-response";
  }
  std::string_view operator()(const RepositoryAckMsg&) const {
    return "repository-ack";
  }
  std::string_view operator()(const CrlBroadcastMsg&) const {
    return "crl-broadcast";
  }
};

}  // namespace

std::string_view MessageKind(const Message& msg) {
  return std::visit(KindVisitor{}, msg);
}

}  // namespace orbitpki::actors
