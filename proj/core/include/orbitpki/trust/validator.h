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

#ifndef ORBITPKI_TRUST_VALIDATOR_H_
#define ORBITPKI_TRUST_VALIDATOR_H_

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitpki/geometry/orbit.h"
#include "orbitpki/pki/certificate.h"
#include "orbitpki/trust/path_builder.h"
#include "orbitpki/trust/trust_graph.h"

namespace orbitpki::trust {

using pki::PolicyId;
using pki::PolicyMappingTable;
using pki::RevocationList;

inline constexpr double kDefaultStalenessLimitS = 86400.0;

enum class ValidationStatus {
  kValid,
  kExpired,
  kRevoked,
  kNoPath,
  kPolicyViolation,
  kBadSignature,
  kStaleRevocationData,
};

std::string_view StatusName(ValidationStatus status);
ValidationStatus ParseStatus(std::string_view name);

struct CheckOutcome {
  std::string name;  // structure, signatures, validity, constraints, ...
  bool passed = false;
  std::string detail;
};

struct ValidationResult {
  ValidationStatus status = ValidationStatus::kNoPath;
  Chain path;
  double checked_at_s = 0.0;
  std::string detail;
  // Checks that ran, in order. Checks after the first failure are absent.
  std::vector<CheckOutcome> checks;
  std::vector<std::string> warnings;

  bool ok() const { return status == ValidationStatus::kValid; }
};

struct PolicyContext {
  // Empty means "any policy".
  std::set<PolicyId> required_policies;
  std::optional<PolicyMappingTable> mapping_table;
  // Required whenever mapping_table is set.
  std::optional<pki::PublicKey> publisher_key;
};

struct ValidationOptions {
  double staleness_limit_s = kDefaultStalenessLimitS;
  // Where the target's subject was actually observed, for certificates that
  // carry an orbital binding.
  std::optional<geometry::EciPosition> observed_target_position;
  double binding_tolerance_km = 50.0;
  bool binding_fatal = false;
};

// Replaces each mapped policy id and passes the rest through. The caller is
// responsible for having verified the table.
std::set<PolicyId> ApplyPolicyMapping(const PolicyMappingTable& table,
                                      const std::set<PolicyId>& policies);

// Checks, in order: structure, signatures, validity, CA/path-length
// constraints, revocation (revoked before stale), policy. The first failure
// decides the status.
ValidationResult ValidateChain(std::span<const Certificate> chain,
                               double now_s,
                               std::span<const RevocationList> crl_view,
                               const PolicyContext& ctx,
                               const ValidationOptions& options = {});

// Discovers every path from `anchor` and validates each in order. Returns
// the first VALID result, otherwise the result for the first chain, or
// NO_PATH when nothing was found.
ValidationResult ValidateTarget(const TrustGraph& graph,
                                const Certificate& target,
                                const Certificate& anchor, double now_s,
                                std::span<const RevocationList> crl_view,
                                const PolicyContext& ctx,
                                const ValidationOptions& options = {},
                                int max_depth = kDefaultMaxDepth);

}  // namespace orbitpki::trust

#endif  // ORBITPKI_TRUST_VALIDATOR_H_
