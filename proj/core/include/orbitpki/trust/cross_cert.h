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

#ifndef ORBITPKI_TRUST_CROSS_CERT_H_
#define ORBITPKI_TRUST_CROSS_CERT_H_

#include <vector>

#include "orbitpki/pki/ca.h"

namespace orbitpki::trust {

struct CrossCertificatePair {
  pki::Certificate forward;  // bridge -> principal CA
  pki::Certificate reverse;  // principal CA -> bridge
};

// Mutual certification between a bridge CA and a principal CA. The forward
// certificate carries `mappings`. Both certificates are CA certificates with
// the issuers' default lifetime, clipped to the issuers' own validity.
// Throws Error(kAuthority) if either party is not a CA.
CrossCertificatePair CrossCertify(pki::CaState& bridge,
                                  pki::CaState& principal, double now_s,
                                  std::vector<pki::PolicyMapping> mappings = {});

}  // namespace orbitpki::trust

#endif  // ORBITPKI_TRUST_CROSS_CERT_H_
