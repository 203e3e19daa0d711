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

#ifndef ORBITPKI_SCENARIOS_WORLD_H_
#define ORBITPKI_SCENARIOS_WORLD_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitpki/pki/ca.h"
#include "orbitpki/scenarios/scenario.h"

namespace orbitpki::scenarios {

inline constexpr double kRootLifetimeS = 20.0 * pki::kSecondsPerYear;
inline constexpr double kCaLifetimeS = 10.0 * pki::kSecondsPerYear;

struct NodeCredentials {
  pki::KeyPair keys;
  std::optional<pki::Certificate> ipki_cert;
  // SpcPKI: identity certificate from the ground root and operational
  // certificate from Spc-CA under `spc_keys`.
  pki::KeyPair spc_keys;
  std::optional<pki::Certificate> spc_id_cert;
  std::optional<pki::Certificate> spc_cert;
};

// Key and certificate material for every node, issued at time zero.
struct World {
  // iPKI: bridge, principal and intermediate CAs by name.
  std::map<std::string, pki::CaState> ipki_cas;
  std::string bridge;
  std::vector<pki::Certificate> ipki_certificates;  // excluding the bridge root
  std::optional<pki::PolicyMappingTable> mapping_table;

  // SpcPKI.
  std::optional<pki::CaState> grd_ca;
  std::optional<pki::CaState> spc_ca;

  std::map<std::string, NodeCredentials> nodes;

  const pki::CaState& Bridge() const { return ipki_cas.at(bridge); }
  std::vector<pki::RevocationList> IpkiCrls() const;
  std::vector<pki::RevocationList> SpcCrls() const;
};

// Throws Error(kConfiguration) when the scenario does not validate.
World BuildWorld(const Scenario& scenario);

// Revokes the certificate for `subject` in the PKI used by `scheme` and
// returns the issuer's new CRL. Returns nothing when the subject has no
// certificate in that PKI.
std::optional<pki::RevocationList> RevokeSubject(World& world, SchemeId scheme,
                                                 const std::string& subject,
                                                 double now_s);

}  // namespace orbitpki::scenarios

#endif  // ORBITPKI_SCENARIOS_WORLD_H_
