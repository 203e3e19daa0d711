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

#ifndef ORBITPKI_ACTORS_MESSAGES_H_
#define ORBITPKI_ACTORS_MESSAGES_H_

#include <cstdint>
#include <vector>

#include "orbitpki/actors/actor_id.h"
#include "orbitpki/pki/bytes.h"
#include "orbitpki/pki/certificate.h"
#include "orbitpki/pki/signature.h"
#include "orbitpki/trust/validator.h"

namespace orbitpki::actors {

using pki::Bytes;
using pki::Certificate;

struct ValidationRequestMsg {
  ActorId requester;
  // Presented so the validator can check the request signature; the
  // validator still has to chain it to its own anchor.
  Certificate requester_certificate;
  Certificate target_cert;
  Bytes nonce;
  double sent_s = 0.0;
  Bytes requester_signature;
};

struct ValidationResponseMsg {
  Bytes request_nonce;
  trust::ValidationResult result;
  ActorId responder;
  Bytes responder_signature;
};

struct RepositoryPayload {
  std::vector<Certificate> certificates;
  std::vector<pki::RevocationList> crls;
  std::vector<pki::PolicyMappingTable> mapping_tables;

  bool empty() const {
    return certificates.empty() && crls.empty() && mapping_tables.empty();
  }
  bool operator==(const RepositoryPayload&) const = default;
};

struct RepositoryUpdateMsg {
  ActorId publisher;
  RepositoryPayload payload;
  std::uint64_t version = 0;
  Bytes signature;
};

// Messages signed by their senders. Each encoding covers every field except
// the signature.
Bytes CanonicalEncode(const ValidationRequestMsg& msg);
Bytes CanonicalEncode(const ValidationResponseMsg& msg);
Bytes CanonicalEncode(const RepositoryUpdateMsg& msg);

void SignRequest(ValidationRequestMsg& msg, const pki::KeyPair& keys);
void SignResponse(ValidationResponseMsg& msg, const pki::KeyPair& keys);
void SignUpdate(RepositoryUpdateMsg& msg, const pki::KeyPair& keys);

bool VerifyRequest(const ValidationRequestMsg& msg);  // under requester cert
bool VerifyResponse(const ValidationResponseMsg& msg,
                    const pki::PublicKey& responder_key);
bool VerifyUpdate(const RepositoryUpdateMsg& msg,
                  const pki::PublicKey& publisher_key);

}  // namespace orbitpki::actors

#endif  // ORBITPKI_ACTORS_MESSAGES_H_
