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

#include "support/fixtures.h"

namespace orbitpki::testing {

namespace {

constexpr double kRootLifetimeS = 20 * pki::kSecondsPerYear;
constexpr double kCaLifetimeS = 10 * pki::kSecondsPerYear;

}  // namespace

BridgeWorld MakeBridgeWorld(pki::SignatureAlgorithm alg, double now_s) {
  BridgeWorld w;
  w.bca = pki::MakeRootCa("Grd-BCA", pki::DeriveKeyPair(alg, 1, "Grd-BCA"),
                          now_s, kRootLifetimeS);
  w.pca1 = pki::MakeRootCa("Grd-PCA-1", pki::DeriveKeyPair(alg, 1, "Grd-PCA-1"),
                           now_s, kRootLifetimeS, {kPolicy1});
  w.pca2 = pki::MakeRootCa("Grd-PCA-2", pki::DeriveKeyPair(alg, 1, "Grd-PCA-2"),
                           now_s, kRootLifetimeS, {kPolicy2});
  for (pki::CaState* ca : {&w.bca, &w.pca1, &w.pca2}) {
    ca->default_lifetime_s = kCaLifetimeS;
  }
  w.pair1 = trust::CrossCertify(w.bca, w.pca1, now_s);
  w.pair2 = trust::CrossCertify(w.bca, w.pca2, now_s, {{kPolicy2, kPolicy1}});

  const pki::KeyPair ica_keys = pki::DeriveKeyPair(alg, 1, "ICA-2");
  pki::CertificateRequest ica_req;
  ica_req.subject_name = "ICA-2";
  ica_req.subject_public_key = ica_keys.public_key;
  ica_req.is_ca = true;
  ica_req.policy_ids = {kPolicy2};
  w.ica2_cert = pki::IssueCertificate(w.pca2, ica_req, now_s);
  w.ica2 = pki::MakeSubordinateCa("ICA-2", ica_keys, w.ica2_cert, now_s);

  w.sat_a_keys = pki::DeriveKeyPair(alg, 1, "Sat-A");
  pki::CertificateRequest sat_req;
  sat_req.subject_name = "Sat-A";
  sat_req.subject_public_key = w.sat_a_keys.public_key;
  sat_req.policy_ids = {kPolicy2};
  w.sat_a = pki::IssueCertificate(w.ica2, sat_req, now_s);

  w.rp_keys = pki::DeriveKeyPair(alg, 1, "Spc-RP");
  pki::CertificateRequest rp_req;
  rp_req.subject_name = "Spc-RP";
  rp_req.subject_public_key = w.rp_keys.public_key;
  rp_req.policy_ids = {kPolicy1};
  w.rp = pki::IssueCertificate(w.pca1, rp_req, now_s);

  w.mapping = pki::PublishMappingTable(w.bca, {{kPolicy2, kPolicy1}}, 1);
  return w;
}

std::vector<pki::Certificate> BridgeWorld::Certificates() const {
  return {pca1.certificate, pca2.certificate, pair1.forward, pair1.reverse,
          pair2.forward,    pair2.reverse,    ica2_cert,     sat_a,
          rp};
}

std::vector<pki::RevocationList> BridgeWorld::Crls() const {
  return {bca.crl, pca1.crl, pca2.crl, ica2.crl};
}

trust::TrustGraph BridgeWorld::Graph() const {
  trust::TrustGraph g;
  g.AddAnchor(bca.certificate);
  const auto certs = Certificates();
  g.AddAll(certs);
  return g;
}

trust::PolicyContext BridgeWorld::Pki1Context() const {
  trust::PolicyContext ctx;
  ctx.required_policies = {kPolicy1};
  ctx.mapping_table = mapping;
  ctx.publisher_key = bca.keys.public_key;
  return ctx;
}

trust::Chain BridgeWorld::SatAChain() const {
  return {bca.certificate, pair2.forward, ica2_cert, sat_a};
}

}  // namespace orbitpki::testing
