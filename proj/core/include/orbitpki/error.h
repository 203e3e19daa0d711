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

#ifndef ORBITPKI_ERROR_H_
#define ORBITPKI_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitpki {

enum class ErrorCode {
  kDomain,          // argument outside the mathematical domain
  kEncoding,        // canonical encoding/decoding failure
  kAuthority,       // issuer is not allowed to act as a CA
  kValidity,        // validity window violation at issuance
  kNotFound,
  kAlreadyRevoked,
  kAnchor,          // trust anchor unknown to the graph
  kScheduling,      // event scheduled in the past
  kRouting,         // unknown destination
  kSecurity,        // signature failure on an inbound message
  kStaleVersion,    // replayed or out-of-order update
  kConfiguration,
  kParse,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All failures raised by the library carry a code so callers can branch
// without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orbitpki

#endif  // ORBITPKI_ERROR_H_
