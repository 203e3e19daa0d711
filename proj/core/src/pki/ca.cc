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

#include "orbitpki/pki/ca.h"

#include <algorithm>

#include "orbitpki/error.h"
#include "orbitpki/pki/encoding.h"

namespace orbitpki::pki {

namespace {

void SignCertificate(Certificate& cert, const KeyPair& issuer_keys) {
  cert.signature = Sign(issuer_keys, CanonicalEncode(cert));
}

void SignCrl(RevocationList& crl, const KeyPair& issuer_keys) {
  crl.signature = Sign(issuer_keys, CanonicalEncode(crl));
}

RevocationList EmptyCrl(const CaState& ca, double now_s) {
  RevocationList crl;
  crl.issuer_name = ca.name;
  crl.crl_number = 1;
  crl.this_update_s = now_s;
  crl.next_update_s = now_s + ca.crl_interval_s;
  SignCrl(crl, ca.keys);
  return crl;
}

}  // namespace

std::string_view ReasonName(RevocationReason reason) {
  switch (reason) {
    case RevocationReason::kUnspecified: return "unspecified";
    case RevocationReason::kKeyCompromise: return "key_compromise";
    case RevocationReason::kCaCompromise: return "ca_compromise";
    case RevocationReason::kAffiliationChanged: return "affiliation_changed";
    case RevocationReason::kSuperseded: return "superseded";
    case RevocationReason::kCessationOfOperation:
      return "cessation_of_operation";
  }
  return "unspecified";
}

RevocationReason ParseReason(std::string_view name) {
  for (auto r : {RevocationReason::kUnspecified, RevocationReason::kKeyCompromise,
                 RevocationReason::kCaCompromise,
                 RevocationReason::kAffiliationChanged,
                 RevocationReason::kSuperseded,
                 RevocationReason::kCessationOfOperation}) {
    if (ReasonName(r) == name) return r;
  }
  throw Error(ErrorCode::kParse,
              "unknown revocation reason '" + std::string(name) + "'");
}

const RevocationEntry* RevocationList::Find(std::uint64_t serial) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), serial,
      [](const RevocationEntry& e, std::uint64_t s) { return e.serial < s; });
  if (it == entries.end() || it->serial != serial) return nullptr;
  return &*it;
}

CaState MakeRootCa(const std::string& name, const KeyPair& keys, double now_s,
                   double lifetime_s, std::set<PolicyId> policy_ids) {
  if (!(lifetime_s > 0.0)) {
    throw Error(ErrorCode::kValidity, "root lifetime must be positive");
  }
  CaState ca;
  ca.name = name;
  ca.keys = keys;
  Certificate& cert = ca.certificate;
  cert.serial = ca.next_serial++;
  cert.subject_name = name;
  cert.issuer_name = name;
  cert.subject_public_key = keys.public_key;
  cert.subject_public_key_id = keys.public_key_id;
  cert.not_before_s = now_s;
  cert.not_after_s = now_s + lifetime_s;
  cert.is_ca = true;
  cert.policy_ids = std::move(policy_ids);
  SignCertificate(cert, keys);
  ca.issued.emplace(cert.serial, name);
  ca.crl = EmptyCrl(ca, now_s);
  return ca;
}

CaState MakeSubordinateCa(const std::string& name, const KeyPair& keys,
                          const Certificate& certificate, double now_s) {
  if (!certificate.is_ca) {
    throw Error(ErrorCode::kAuthority,
                "certificate for '" + name + "' is not a CA certificate");
  }
  if (certificate.subject_name != name ||
      certificate.subject_public_key != keys.public_key) {
    throw Error(ErrorCode::kAuthority,
                "certificate does not belong to '" + name + "'");
  }
  CaState ca;
  ca.name = name;
  ca.keys = keys;
  ca.certificate = certificate;
  ca.crl = EmptyCrl(ca, now_s);
  return ca;
}

Certificate IssueCertificate(CaState& issuer, const CertificateRequest& request,
                             double now_s) {
  if (!issuer.certificate.is_ca) {
    throw Error(ErrorCode::kAuthority,
                "'" + issuer.name + "' is not a certification authority");
  }
  if (!request.policy_mappings.empty() && !request.is_ca) {
    throw Error(ErrorCode::kAuthority,
                "policy mappings are only allowed on CA certificates");
  }
  const double not_before = request.not_before_s.value_or(now_s);
  const double not_after =
      request.not_after_s.value_or(not_before + issuer.default_lifetime_s);
  if (!(not_before < not_after)) {
    throw Error(ErrorCode::kValidity, "empty validity window");
  }
  if (not_before < issuer.certificate.not_before_s ||
      not_after > issuer.certificate.not_after_s) {
    throw Error(ErrorCode::kValidity,
                "requested validity for '" + request.subject_name +
                    "' exceeds the validity of issuer '" + issuer.name + "'");
  }

  Certificate cert;
  cert.serial = issuer.next_serial++;
  cert.subject_name = request.subject_name;
  cert.issuer_name = issuer.name;
  cert.subject_public_key = request.subject_public_key;
  cert.subject_public_key_id = ComputeKeyId(request.subject_public_key);
  cert.not_before_s = not_before;
  cert.not_after_s = not_after;
  cert.is_ca = request.is_ca;
  cert.path_len_constraint = request.path_len_constraint;
  cert.policy_ids = request.policy_ids;
  cert.policy_mappings = request.policy_mappings;
  cert.orbital_binding = request.orbital_binding;
  SignCertificate(cert, issuer.keys);
  issuer.issued.emplace(cert.serial, cert.subject_name);
  return cert;
}

RevocationList RevokeCertificate(CaState& issuer, std::uint64_t serial,
                                 RevocationReason reason, double now_s) {
  if (!issuer.issued.contains(serial)) {
    throw Error(ErrorCode::kNotFound, "serial " + std::to_string(serial) +
                                          " was not issued by '" +
                                          issuer.name + "'");
  }
  if (issuer.crl.Find(serial) != nullptr) {
    throw Error(ErrorCode::kAlreadyRevoked,
                "serial " + std::to_string(serial) + " is already revoked");
  }
  RevocationList next = issuer.crl;
  RevocationEntry entry{serial, now_s, reason};
  next.entries.insert(
      std::upper_bound(next.entries.begin(), next.entries.end(), entry,
                       [](const RevocationEntry& a, const RevocationEntry& b) {
                         return a.serial < b.serial;
                       }),
      entry);
  next.crl_number += 1;
  next.this_update_s = std::max(now_s, issuer.crl.this_update_s);
  next.next_update_s = next.this_update_s + issuer.crl_interval_s;
  SignCrl(next, issuer.keys);
  issuer.crl = next;
  return next;
}

RevocationList RefreshCrl(CaState& issuer, double now_s) {
  RevocationList next = issuer.crl;
  next.crl_number += 1;
  next.this_update_s = std::max(now_s, issuer.crl.this_update_s);
  next.next_update_s = next.this_update_s + issuer.crl_interval_s;
  SignCrl(next, issuer.keys);
  issuer.crl = next;
  return next;
}

PolicyMappingTable PublishMappingTable(const CaState& publisher,
                                       std::map<PolicyId, PolicyId> entries,
                                       std::uint64_t version) {
  PolicyMappingTable table;
  table.entries = std::move(entries);
  table.version = version;
  table.publisher = publisher.name;
  table.signature = Sign(publisher.keys, CanonicalEncode(table));
  return table;
}

bool VerifySignature(const Certificate& cert, const PublicKey& issuer_key) {
  try {
    return Verify(issuer_key, CanonicalEncode(cert), cert.signature);
  } catch (const Error&) {
    return false;
  }
}

bool VerifyCrl(const RevocationList& crl, const PublicKey& issuer_key) {
  try {
    return Verify(issuer_key, CanonicalEncode(crl), crl.signature);
  } catch (const Error&) {
    return false;
  }
}

bool VerifyMappingTable(const PolicyMappingTable& table,
                        const PublicKey& publisher_key) {
  try {
    return Verify(publisher_key, CanonicalEncode(table), table.signature);
  } catch (const Error&) {
    return false;
  }
}

BindingCheck CheckOrbitalBinding(const OrbitalBinding& binding,
                                 const geometry::EciPosition& observed,
                                 double t_s, double tolerance_km) {
  geometry::CircularOrbit orbit;
  orbit.altitude_km = binding.altitude_km;
  orbit.inclination_deg = binding.inclination_deg;
  orbit.raan_deg = binding.raan_deg;
  orbit.phase_deg = binding.phase_deg;
  orbit.epoch_s = binding.epoch_s;
  const double deviation =
      geometry::DistanceKm(geometry::SatellitePosition(orbit, t_s), observed);
  return BindingCheck{deviation <= tolerance_km, deviation};
}

}  // namespace orbitpki::pki
