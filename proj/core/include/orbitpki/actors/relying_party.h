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

#ifndef ORBITPKI_ACTORS_RELYING_PARTY_H_
#define ORBITPKI_ACTORS_RELYING_PARTY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitpki/actors/messages.h"
#include "orbitpki/geometry/orbit.h"
#include "orbitpki/geometry/visibility.h"
#include "orbitpki/trust/validator.h"

namespace orbitpki::actors {

inline constexpr double kDefaultResponseCacheTtlS = 300.0;

struct AuthorityCandidate {
  ActorId id;
  geometry::NodeGeometry geometry;
};

// The visible candidate closest to `rp` at `t_s`; ties go to the lower index.
std::optional<ActorId> RpSelectAuthority(
    const geometry::NodeGeometry& rp,
    std::span<const AuthorityCandidate> candidates, double t_s,
    const geometry::LinkOptions& options = {});

struct RpState {
  ActorId id;
  pki::KeyPair keys;
  Certificate certificate;
  Certificate anchor;  // ground root the RP trusts
  // Authority certificates learned at bootstrap.
  std::map<ActorId, Certificate> authorities;
  double cache_ttl_s = kDefaultResponseCacheTtlS;

  struct Outstanding {
    std::uint64_t request_id = 0;
    pki::CertKey target;
  };
  std::map<Bytes, Outstanding> outstanding;  // by nonce

  struct CachedResponse {
    trust::ValidationResult result;
    double expires_s = 0.0;
  };
  std::map<pki::CertKey, CachedResponse> cache;
};

// Signs a request for `target` and records the nonce as outstanding.
ValidationRequestMsg RpMakeRequest(RpState& rp, const Certificate& target,
                                   Bytes nonce, double now_s,
                                   std::uint64_t request_id);

enum class ResponseDisposition {
  kAccepted,
  kUnknownNonce,  // duplicate or never requested
  kUnauthentic,   // responder not chained to the anchor or bad signature
};

struct AcceptedResponse {
  ResponseDisposition disposition = ResponseDisposition::kUnknownNonce;
  std::uint64_t request_id = 0;
};

// Consumes the nonce on success and caches the result for cache_ttl_s.
AcceptedResponse RpAcceptResponse(RpState& rp,
                                  const ValidationResponseMsg& response,
                                  double now_s);

const trust::ValidationResult* RpCachedResult(const RpState& rp,
                                              const pki::CertKey& target,
                                              double now_s);

// Material an RP holds for local validation in SpcPKI.
struct RpCache {
  Certificate anchor;
  std::vector<Certificate> certificates;
  std::vector<pki::RevocationList> crls;
  trust::PolicyContext policy;
};

// Keeps only the newest list per issuer.
void RpStoreCrl(RpCache& cache, const pki::RevocationList& crl);

trust::ValidationResult RpLocalValidate(const RpCache& cache,
                                 const Certificate& target, double now_s,
                                 double staleness_limit_s);

}  // namespace orbitpki::actors

#endif  // ORBITPKI_ACTORS_RELYING_PARTY_H_
