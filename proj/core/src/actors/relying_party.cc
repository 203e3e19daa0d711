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

#include "orbitpki/actors/relying_party.h"

#include "orbitpki/pki/ca.h"
#include "orbitpki/trust/trust_graph.h"

namespace orbitpki::actors {

std::optional<ActorId> RpSelectAuthority(
    const geometry::NodeGeometry& rp,
    std::span<const AuthorityCandidate> candidates, double t_s,
    const geometry::LinkOptions& options) {
  const auto rp_pos = geometry::PositionAt(rp, t_s);
  std::optional<ActorId> best;
  double best_km = 0.0;
  for (const auto& c : candidates) {
    const auto pos = geometry::PositionAt(c.geometry, t_s);
    if (!geometry::HasLineOfSight(rp_pos, pos, options)) continue;
    const double d = geometry::DistanceKm(rp_pos, pos);
    if (!best || d < best_km || (d == best_km && c.id.index < best->index)) {
      best = c.id;
      best_km = d;
    }
  }
  return best;
}

ValidationRequestMsg RpMakeRequest(RpState& rp, const Certificate& target,
                                   Bytes nonce, double now_s,
                                   std::uint64_t request_id) {
  ValidationRequestMsg req;
  req.requester = rp.id;
  req.requester_certificate = rp.certificate;
  req.target_cert = target;
  req.nonce = std::move(nonce);
  req.sent_s = now_s;
  SignRequest(req, rp.keys);
  rp.outstanding[req.nonce] = {request_id, target.key()};
  return req;
}

AcceptedResponse RpAcceptResponse(RpState& rp,
                                  const ValidationResponseMsg& response,
                                  double now_s) {
  const auto out = rp.outstanding.find(response.request_nonce);
  if (out == rp.outstanding.end()) {
    return {ResponseDisposition::kUnknownNonce, 0};
  }
  const auto auth = rp.authorities.find(response.responder);
  if (auth == rp.authorities.end()) {
    return {ResponseDisposition::kUnauthentic, out->second.request_id};
  }
  const Certificate& responder = auth->second;
  const bool chained =
      responder.issuer_name == rp.anchor.subject_name &&
      pki::VerifySignature(responder, rp.anchor.subject_public_key) &&
      responder.ValidAt(now_s);
  if (!chained || !VerifyResponse(response, responder.subject_public_key)) {
    return {ResponseDisposition::kUnauthentic, out->second.request_id};
  }
  const AcceptedResponse accepted{ResponseDisposition::kAccepted,
                                  out->second.request_id};
  if (rp.cache_ttl_s > 0.0) {
    rp.cache[out->second.target] = {response.result, now_s + rp.cache_ttl_s};
  }
  rp.outstanding.erase(out);
  return accepted;
}

const trust::ValidationResult* RpCachedResult(const RpState& rp,
                                              const pki::CertKey& target,
                                              double now_s) {
  const auto it = rp.cache.find(target);
  if (it == rp.cache.end() || now_s >= it->second.expires_s) return nullptr;
  return &it->second.result;
}

void RpStoreCrl(RpCache& cache, const pki::RevocationList& crl) {
  for (auto& held : cache.crls) {
    if (held.issuer_name != crl.issuer_name) continue;
    if (held.IsOlderThan(crl)) held = crl;
    return;
  }
  cache.crls.push_back(crl);
}

trust::ValidationResult RpLocalValidate(const RpCache& cache,
                                        const Certificate& target,
                                        double now_s,
                                        double staleness_limit_s) {
  trust::TrustGraph graph;
  graph.AddAnchor(cache.anchor);
  graph.AddAll(cache.certificates);
  trust::ValidationOptions options;
  options.staleness_limit_s = staleness_limit_s;
  return trust::ValidateTarget(graph, target, cache.anchor, now_s, cache.crls,
                               cache.policy, options);
}

}  // namespace orbitpki::actors
