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

#ifndef ORBITPKI_SCENARIOS_SCENARIO_H_
#define ORBITPKI_SCENARIOS_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitpki/actors/actor_id.h"
#include "orbitpki/actors/relying_party.h"
#include "orbitpki/geometry/orbit.h"
#include "orbitpki/geometry/visibility.h"
#include "orbitpki/pki/certificate.h"
#include "orbitpki/pki/signature.h"
#include "orbitpki/sim/engine.h"
#include "orbitpki/trust/validator.h"

namespace orbitpki::scenarios {

using actors::ActorId;
using actors::Role;

enum class SchemeId {
  kDelayedGround,
  kRelayGeo,
  kIpkiCase1,
  kIpkiCase2,
  kSpcpkiLocal,
  kSpcpkiDelegated,
};

inline constexpr SchemeId kAllSchemes[] = {
    SchemeId::kDelayedGround, SchemeId::kRelayGeo,   SchemeId::kIpkiCase1,
    SchemeId::kIpkiCase2,     SchemeId::kSpcpkiLocal, SchemeId::kSpcpkiDelegated};

// "IPKI_CASE1", ...
std::string_view SchemeName(SchemeId scheme);
SchemeId ParseScheme(std::string_view name);
bool IsIpki(SchemeId scheme);  // schemes that use the bridged ground PKIs
bool IsSpcpki(SchemeId scheme);

inline constexpr int kSchemaVersion = 1;
inline constexpr char kDefaultSpcPolicy[] = "1.3.6.1.4.1.99999.9.1";

struct NodeSpec {
  std::string name;  // unique; also the certificate subject
  ActorId id;
  geometry::NodeGeometry geometry;
  std::string domain;  // iPKI member domain, SPC_RP only
  double processing_s = 0.0;
};

struct DomainSpec {
  std::string name;
  std::string pca;  // principal CA, cross-certified with the bridge
  pki::PolicyId policy;
  // Chain of CAs under the PCA; members are issued by the last one.
  std::vector<std::string> intermediates;
};

struct PolicyMappingSpec {
  pki::PolicyId from;
  pki::PolicyId to;
};

struct RevocationSpec {
  double at_s = 0.0;
  std::string subject;
};

struct TrustSpec {
  pki::SignatureAlgorithm algorithm = pki::SignatureAlgorithm::kMock;
  std::vector<DomainSpec> domains;
  std::vector<PolicyMappingSpec> policy_mappings;
  pki::PolicyId spc_policy = kDefaultSpcPolicy;
  std::vector<RevocationSpec> revocations;
  double crl_interval_s = pki::kDefaultCrlIntervalS;
};

struct WorkloadRequest {
  double at_s = 0.0;
  std::string requester;
  std::string target;
  bool operator==(const WorkloadRequest&) const = default;
};

// Homogeneous arrivals with requester/target pairs drawn under the seed.
struct WorkloadGenerator {
  double start_s = 0.0;
  double rate_per_s = 1.0;
  std::size_t count = 0;
  // Empty means every SPC_RP node.
  std::vector<std::string> requesters;
  std::vector<std::string> targets;
};

struct WorkloadSpec {
  std::vector<WorkloadRequest> requests;
  std::optional<WorkloadGenerator> generator;
};

struct SimulationOptions {
  sim::RelayConfig relay;
  double rp_cache_ttl_s = actors::kDefaultResponseCacheTtlS;
  double staleness_limit_s = trust::kDefaultStalenessLimitS;
  // Case 2 only. How long a validator reuses a fetched repository snapshot;
  // zero fetches on every request.
  double va_repository_cache_s = 0.0;
  geometry::LinkOptions link;
  geometry::WindowSearchOptions search;
};

struct Scenario {
  int schema_version = kSchemaVersion;
  std::string name;
  SchemeId scheme = SchemeId::kIpkiCase1;
  std::uint64_t seed = 1;
  double duration_s = 60.0;
  std::vector<NodeSpec> nodes;
  TrustSpec trust;
  WorkloadSpec workload;
  SimulationOptions options;

  const NodeSpec* FindNode(std::string_view name) const;
  const NodeSpec* FindNode(const ActorId& id) const;
  std::vector<const NodeSpec*> NodesWithRole(Role role) const;

  // Every inconsistency found, in a stable order. Empty when the scenario
  // can run under `scheme`.
  std::vector<std::string> Problems() const;
  // Throws Error(kConfiguration) listing all problems.
  void Validate() const;
};

// Explicit requests followed by generated ones, stably sorted by time.
std::vector<WorkloadRequest> ExpandWorkload(const Scenario& scenario);

}  // namespace orbitpki::scenarios

#endif  // ORBITPKI_SCENARIOS_SCENARIO_H_
