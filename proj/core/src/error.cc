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

#include "orbitpki/error.h"

namespace orbitpki {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kEncoding: return "encoding";
    case ErrorCode::kAuthority: return "authority";
    case ErrorCode::kValidity: return "validity";
    case ErrorCode::kNotFound: return "not-found";
    case ErrorCode::kAlreadyRevoked: return "already-revoked";
    case ErrorCode::kAnchor: return "anchor";
    case ErrorCode::kScheduling: return "scheduling";
    case ErrorCode::kRouting: return "routing";
    case ErrorCode::kSecurity: return "security";
    case ErrorCode::kStaleVersion: return "stale-version";
    case ErrorCode::kConfiguration: return "configuration";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace orbitpki
