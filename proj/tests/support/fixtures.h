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

#ifndef ORBITPKI_TESTS_SUPPORT_FIXTURES_H_
#define ORBITPKI_TESTS_SUPPORT_FIXTURES_H_

#include <vector>

#include "orbitpki/pki/ca.h"
#include "orbitpki/trust/cross_cert.h"
#include "orbitpki/trust/trust_graph.h"
#include "orbitpki/trust/validator.h"

namespace orbitpki::testing {

inline constexpr char kPolicy1[] = "1.3.6.1.4.1.99999.1.1";
inline constexpr char kPolicy2[] = "1.3.6.1.4.1.99999.2.1";

// Two ground PKIs joined by a bridge CA:
//
//   Grd-BCA (root) <-> Grd-PCA-1 --> Spc-RP
//                  <-> Grd-PCA-2 --> ICA-2 --> Sat-A
struct BridgeWorld {
  pki::CaState bca;
  pki::CaState pca1;
  pki::CaState pca2;
  pki::CaState ica2;
  trust::CrossCertificatePair pair1;
  trust::CrossCertificatePair pair2;
  pki::Certificate ica2_cert;
  pki::KeyPair sat_a_keys;
  pki::Certificate sat_a;
  pki::KeyPair rp_keys;
  pki::Certificate rp;
  pki::PolicyMappingTable mapping;  // PKI-2 policy -> PKI-1 policy

  // Every certificate except the anchor's self-signed one.
  std::vector<pki::Certificate> Certificates() const;
  std::vector<pki::RevocationList> Crls() const;
  // Anchored at the bridge.
  trust::TrustGraph Graph() const;
  trust::PolicyContext Pki1Context() const;
  // Anchor, forward cross-cert, ICA-2, Sat-A.
  trust::Chain SatAChain() const;
};

BridgeWorld MakeBridgeWorld(
    pki::SignatureAlgorithm alg = pki::SignatureAlgorithm::kMock,
    double now_s = 0.0);

}  // namespace orbitpki::testing

#endif  // ORBITPKI_TESTS_SUPPORT_FIXTURES_H_
