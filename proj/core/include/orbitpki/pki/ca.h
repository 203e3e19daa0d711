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

#ifndef ORBITPKI_PKI_CA_H_
#define ORBITPKI_PKI_CA_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbitpki/geometry/orbit.h"
#include "orbitpki/pki/certificate.h"
#include "orbitpki/pki/signature.h"

namespace orbitpki::pki {

// Mutable state of a certification authority. Owned by exactly one actor.
struct CaState {
  std::string name;
  KeyPair keys;
  Certificate certificate;  // the CA's own certificate
  std::uint64_t next_serial = 1;
  std::map<std::uint64_t, std::string> issued;  // serial -> subject
  RevocationList crl;
  double crl_interval_s = kDefaultCrlIntervalS;
  double default_lifetime_s = kDefaultCertificateLifetimeS;

  bool IsRoot() const {
    return certificate.IsSelfIssued() && certificate.is_ca;
  }
};

struct CertificateRequest {
  std::string subject_name;
  PublicKey subject_public_key;
  bool is_ca = false;
  std::optional<std::uint32_t> path_len_constraint;
  std::set<PolicyId> policy_ids;
  std::vector<PolicyMapping> policy_mappings;
  std::optional<OrbitalBinding> orbital_binding;
  // Default to [now, now + issuer.default_lifetime_s].
  std::optional<double> not_before_s;
  std::optional<double> not_after_s;
};

// Self-signed root with an empty initial CRL.
CaState MakeRootCa(const std::string& name, const KeyPair& keys, double now_s,
                   double lifetime_s, std::set<PolicyId> policy_ids = {});

// Wraps a CA whose certificate was issued by someone else. The initial CRL
// is empty and dated `now_s`.
CaState MakeSubordinateCa(const std::string& name, const KeyPair& keys,
                          const Certificate& certificate, double now_s);

// Throws Error(kAuthority) if the issuer is not a CA or the request carries
// policy mappings for an end entity, Error(kValidity) if the requested window
// is empty or leaves the issuer's own window.
Certificate IssueCertificate(CaState& issuer, const CertificateRequest& request,
                             double now_s);

// Appends `serial` to the issuer's CRL and re-signs it.
// Throws Error(kNotFound) for a serial this issuer never issued and
// Error(kAlreadyRevoked) on a second revocation; the CRL is unchanged then.
RevocationList RevokeCertificate(CaState& issuer, std::uint64_t serial,
                                 RevocationReason reason, double now_s);

// Re-issues the current CRL with fresh update times.
RevocationList RefreshCrl(CaState& issuer, double now_s);

PolicyMappingTable PublishMappingTable(const CaState& publisher,
                                       std::map<PolicyId, PolicyId> entries,
                                       std::uint64_t version);

bool VerifySignature(const Certificate& cert, const PublicKey& issuer_key);
bool VerifyCrl(const RevocationList& crl, const PublicKey& issuer_key);
bool VerifyMappingTable(const PolicyMappingTable& table,
                        const PublicKey& publisher_key);

// Distance between the bound orbit and `observed` at time t, compared with
// tolerance_km (50 km by default).
struct BindingCheck {
  bool consistent = true;
  double deviation_km = 0.0;
};
BindingCheck CheckOrbitalBinding(const OrbitalBinding& binding,
                                 const geometry::EciPosition& observed,
                                 double t_s, double tolerance_km = 50.0);

}  // namespace orbitpki::pki

#endif  // ORBITPKI_PKI_CA_H_
