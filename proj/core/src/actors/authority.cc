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

#include "orbitpki/actors/authority.h"

#include <algorithm>

#include "orbitpki/error.h"

namespace orbitpki::actors {

namespace {

ValidationResponseMsg Respond(const ValidatorState& va,
                              const ValidationRequestMsg& req,
                              trust::ValidationResult result) {
  ValidationResponseMsg resp;
  resp.request_nonce = req.nonce;
  resp.result = std::move(result);
  resp.responder = va.id;
  SignResponse(resp, va.keys);
  return resp;
}

trust::ValidationResult Rejection(double now_s, std::string detail) {
  trust::ValidationResult r;
  r.status = trust::ValidationStatus::kBadSignature;
  r.checked_at_s = now_s;
  r.detail = std::move(detail);
  return r;
}

}  // namespace

ValidationResponseMsg VaHandleRequest(const ValidatorState& va,
                                      const RepositoryState& view,
                                      const ValidationRequestMsg& req,
                                      double now_s) {
  const trust::TrustGraph graph = view.Graph(va.anchor);
  const auto crls = view.CrlList();

  const auto requester = trust::ValidateTarget(
      graph, req.requester_certificate, va.anchor, now_s, crls,
      trust::PolicyContext{}, va.options, va.max_depth);
  if (!requester.ok()) {
    return Respond(va, req,
                   Rejection(now_s, "requester certificate: " +
                                        std::string(trust::StatusName(
                                            requester.status))));
  }
  if (!VerifyRequest(req)) {
    return Respond(va, req, Rejection(now_s, "request signature"));
  }

  trust::PolicyContext ctx;
  ctx.required_policies = req.requester_certificate.policy_ids;
  if (const auto* table = view.MappingTable(va.anchor.subject_name)) {
    ctx.mapping_table = *table;
    ctx.publisher_key = va.anchor.subject_public_key;
  }
  return Respond(va, req,
                 trust::ValidateTarget(graph, req.target_cert, va.anchor, now_s,
                                       crls, ctx, va.options, va.max_depth));
}

namespace {

Bytes ProofMessage(pki::ByteView nonce, const pki::PublicKey& key) {
  pki::ByteWriter w;
  w.PutString("OPKP");
  w.PutBytes(nonce);
  w.PutU8(static_cast<std::uint8_t>(key.algorithm));
  w.PutBytes(key.bytes);
  return std::move(w).bytes();
}

}  // namespace

ProofOfPossession MakeProofOfPossession(const pki::KeyPair& new_keys,
                                        pki::ByteView nonce) {
  ProofOfPossession proof;
  proof.nonce.assign(nonce.begin(), nonce.end());
  proof.new_public_key = new_keys.public_key;
  proof.signature =
      pki::Sign(new_keys, ProofMessage(nonce, new_keys.public_key));
  return proof;
}

bool VerifyProofOfPossession(const ProofOfPossession& proof) {
  return pki::Verify(proof.new_public_key,
                     ProofMessage(proof.nonce, proof.new_public_key),
                     proof.signature);
}

Certificate SpcCaEnroll(pki::CaState& spc_ca, const Certificate& ground_anchor,
                        std::span<const pki::RevocationList> ground_crls,
                        const Certificate& id_certificate,
                        const ProofOfPossession& proof, double now_s,
                        std::set<pki::PolicyId> policy_ids) {
  const Certificate chain[] = {ground_anchor, id_certificate};
  const auto id_result = trust::ValidateChain(chain, now_s, ground_crls,
                                              trust::PolicyContext{});
  if (!id_result.ok()) {
    throw Error(ErrorCode::kSecurity,
                "enrollment of '" + id_certificate.subject_name +
                    "' rejected: identity certificate is " +
                    std::string(trust::StatusName(id_result.status)));
  }
  if (!VerifyProofOfPossession(proof)) {
    throw Error(ErrorCode::kSecurity,
                "enrollment of '" + id_certificate.subject_name +
                    "' rejected: bad proof of possession");
  }
  pki::CertificateRequest req;
  req.subject_name = id_certificate.subject_name;
  req.subject_public_key = proof.new_public_key;
  req.policy_ids = policy_ids.empty() ? spc_ca.certificate.policy_ids
                                      : std::move(policy_ids);
  req.not_before_s = now_s;
  req.not_after_s =
      std::min(now_s + spc_ca.default_lifetime_s, spc_ca.certificate.not_after_s);
  return pki::IssueCertificate(spc_ca, req, now_s);
}

}  // namespace orbitpki::actors
