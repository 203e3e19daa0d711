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

#include "orbitpki/trust/cross_cert.h"

#include <algorithm>

#include "orbitpki/error.h"

namespace orbitpki::trust {

namespace {

pki::Certificate CertifyPeer(pki::CaState& issuer, const pki::CaState& subject,
                             double now_s,
                             std::vector<pki::PolicyMapping> mappings) {
  pki::CertificateRequest req;
  req.subject_name = subject.name;
  req.subject_public_key = subject.keys.public_key;
  req.is_ca = true;
  req.policy_ids = subject.certificate.policy_ids;
  req.policy_mappings = std::move(mappings);
  req.not_before_s = now_s;
  req.not_after_s = std::min(now_s + issuer.default_lifetime_s,
                             issuer.certificate.not_after_s);
  return pki::IssueCertificate(issuer, req, now_s);
}

}  // namespace

CrossCertificatePair CrossCertify(pki::CaState& bridge,
                                  pki::CaState& principal, double now_s,
                                  std::vector<pki::PolicyMapping> mappings) {
  if (!bridge.certificate.is_ca || !principal.certificate.is_ca) {
    throw Error(ErrorCode::kAuthority,
                "cross-certification requires two certification authorities");
  }
  CrossCertificatePair pair;
  pair.forward = CertifyPeer(bridge, principal, now_s, std::move(mappings));
  pair.reverse = CertifyPeer(principal, bridge, now_s, {});
  return pair;
}

}  // namespace orbitpki::trust
