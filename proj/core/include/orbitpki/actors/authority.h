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

#ifndef ORBITPKI_ACTORS_AUTHORITY_H_
#define ORBITPKI_ACTORS_AUTHORITY_H_

#include <set>
#include <span>

#include "orbitpki/actors/messages.h"
#include "orbitpki/actors/repository.h"
#include "orbitpki/pki/ca.h"
#include "orbitpki/trust/validator.h"

namespace orbitpki::actors {

// An entity that answers validation requests: Spc-VA in iPKI, Spc-CA in
// delegated SpcPKI, or a ground validation site.
struct ValidatorState {
  ActorId id;
  pki::KeyPair keys;
  Certificate certificate;  // issued directly by `anchor`
  Certificate anchor;
  trust::ValidationOptions options;
  int max_depth = trust::kDefaultMaxDepth;
};

// Validates the requester, then the target, against `view`. Required
// policies are the requester's own; a mapping table published by the anchor
// is applied when the view holds one. A requester that does not validate or
// whose signature fails yields a signed BAD_SIGNATURE response.
ValidationResponseMsg VaHandleRequest(const ValidatorState& va,
                                      const RepositoryState& view,
                                      const ValidationRequestMsg& req,
                                      double now_s);

struct ProofOfPossession {
  Bytes nonce;
  pki::PublicKey new_public_key;
  Bytes signature;  // over nonce || new public key, by the new private key
};

ProofOfPossession MakeProofOfPossession(const pki::KeyPair& new_keys,
                                        pki::ByteView nonce);
bool VerifyProofOfPossession(const ProofOfPossession& proof);

// Issues an operational certificate for the subject of `id_certificate`,
// which must validate against `ground_anchor` under `ground_crls`. Throws
// Error(kSecurity) when the identity certificate or the proof is rejected.
Certificate SpcCaEnroll(pki::CaState& spc_ca, const Certificate& ground_anchor,
                        std::span<const pki::RevocationList> ground_crls,
                        const Certificate& id_certificate,
                        const ProofOfPossession& proof, double now_s,
                        std::set<pki::PolicyId> policy_ids = {});

}  // namespace orbitpki::actors

#endif  // ORBITPKI_ACTORS_AUTHORITY_H_
