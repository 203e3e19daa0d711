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

#include "orbitpki/actors/messages.h"

#include "orbitpki/pki/encoding.h"

namespace orbitpki::actors {

namespace {

void PutActor(pki::ByteWriter& w, const ActorId& id) {
  w.PutU8(static_cast<std::uint8_t>(id.role));
  w.PutU32(static_cast<std::uint32_t>(id.index));
}

void PutMagic(pki::ByteWriter& w, std::string_view magic) {
  w.PutString(magic);
  w.PutU8(1);
}

}  // namespace

Bytes CanonicalEncode(const ValidationRequestMsg& msg) {
  pki::ByteWriter w;
  PutMagic(w, "OPKQ");
  PutActor(w, msg.requester);
  w.PutBytes(pki::EncodeCertificate(msg.requester_certificate));
  w.PutBytes(pki::EncodeCertificate(msg.target_cert));
  w.PutBytes(msg.nonce);
  w.PutDouble(msg.sent_s);
  return std::move(w).bytes();
}

Bytes CanonicalEncode(const ValidationResponseMsg& msg) {
  pki::ByteWriter w;
  PutMagic(w, "OPKS");
  w.PutBytes(msg.request_nonce);
  w.PutU8(static_cast<std::uint8_t>(msg.result.status));
  w.PutDouble(msg.result.checked_at_s);
  w.PutU32(static_cast<std::uint32_t>(msg.result.path.size()));
  for (const auto& cert : msg.result.path) {
    w.PutString(cert.issuer_name);
    w.PutU64(cert.serial);
  }
  w.PutString(msg.result.detail);
  PutActor(w, msg.responder);
  return std::move(w).bytes();
}

Bytes CanonicalEncode(const RepositoryUpdateMsg& msg) {
  pki::ByteWriter w;
  PutMagic(w, "OPKU");
  PutActor(w, msg.publisher);
  w.PutU64(msg.version);
  const auto& p = msg.payload;
  w.PutU32(static_cast<std::uint32_t>(p.certificates.size()));
  for (const auto& c : p.certificates) w.PutBytes(pki::EncodeCertificate(c));
  w.PutU32(static_cast<std::uint32_t>(p.crls.size()));
  for (const auto& crl : p.crls) {
    w.PutBytes(pki::CanonicalEncode(crl));
    w.PutBytes(crl.signature);
  }
  w.PutU32(static_cast<std::uint32_t>(p.mapping_tables.size()));
  for (const auto& t : p.mapping_tables) {
    w.PutBytes(pki::CanonicalEncode(t));
    w.PutBytes(t.signature);
  }
  return std::move(w).bytes();
}

void SignRequest(ValidationRequestMsg& msg, const pki::KeyPair& keys) {
  msg.requester_signature = pki::Sign(keys, CanonicalEncode(msg));
}

void SignResponse(ValidationResponseMsg& msg, const pki::KeyPair& keys) {
  msg.responder_signature = pki::Sign(keys, CanonicalEncode(msg));
}

void SignUpdate(RepositoryUpdateMsg& msg, const pki::KeyPair& keys) {
  msg.signature = pki::Sign(keys, CanonicalEncode(msg));
}

bool VerifyRequest(const ValidationRequestMsg& msg) {
  return pki::Verify(msg.requester_certificate.subject_public_key,
                     CanonicalEncode(msg), msg.requester_signature);
}

bool VerifyResponse(const ValidationResponseMsg& msg,
                    const pki::PublicKey& responder_key) {
  return pki::Verify(responder_key, CanonicalEncode(msg),
                     msg.responder_signature);
}

bool VerifyUpdate(const RepositoryUpdateMsg& msg,
                  const pki::PublicKey& publisher_key) {
  return pki::Verify(publisher_key, CanonicalEncode(msg), msg.signature);
}

}  // namespace orbitpki::actors
