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

#ifndef ORBITPKI_PKI_CERTIFICATE_H_
#define ORBITPKI_PKI_CERTIFICATE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "orbitpki/pki/bytes.h"
#include "orbitpki/pki/signature.h"

namespace orbitpki::pki {

inline constexpr double kSecondsPerYear = 365.25 * 86400.0;
inline constexpr double kDefaultCertificateLifetimeS = 2.0 * kSecondsPerYear;
inline constexpr double kDefaultCrlIntervalS = 86400.0;

using PolicyId = std::string;

struct PolicyMapping {
  PolicyId issuer_policy;
  PolicyId subject_policy;

  auto operator<=>(const PolicyMapping&) const = default;
};

// Orbit summary a certificate may be bound to.
struct OrbitalBinding {
  double altitude_km = 0.0;
  double inclination_deg = 0.0;
  double raan_deg = 0.0;
  double phase_deg = 0.0;
  double epoch_s = 0.0;

  bool operator==(const OrbitalBinding&) const = default;
};

// (issuer_name, serial) identifies a certificate globally.
struct CertKey {
  std::string issuer_name;
  std::uint64_t serial = 0;

  auto operator<=>(const CertKey&) const = default;
};

struct Certificate {
  std::uint64_t serial = 0;
  std::string subject_name;
  std::string issuer_name;
  PublicKey subject_public_key;
  KeyId subject_public_key_id{};
  double not_before_s = 0.0;
  double not_after_s = 0.0;
  bool is_ca = false;
  std::optional<std::uint32_t> path_len_constraint;
  std::set<PolicyId> policy_ids;
  // Cross-certificates only.
  std::vector<PolicyMapping> policy_mappings;
  std::optional<OrbitalBinding> orbital_binding;
  Bytes signature;

  CertKey key() const { return {issuer_name, serial}; }
  bool IsSelfIssued() const { return subject_name == issuer_name; }
  bool ValidAt(double t_s) const {
    return not_before_s <= t_s && t_s <= not_after_s;
  }

  bool operator==(const Certificate&) const = default;
};

enum class RevocationReason : std::uint8_t {
  kUnspecified = 0,
  kKeyCompromise = 1,
  kCaCompromise = 2,
  kAffiliationChanged = 3,
  kSuperseded = 4,
  kCessationOfOperation = 5,
};

std::string_view ReasonName(RevocationReason reason);
RevocationReason ParseReason(std::string_view name);

struct RevocationEntry {
  std::uint64_t serial = 0;
  double revocation_time_s = 0.0;
  RevocationReason reason = RevocationReason::kUnspecified;

  bool operator==(const RevocationEntry&) const = default;
};

struct RevocationList {
  std::string issuer_name;
  // Monotone per issuer; breaks ties between lists issued at the same
  // instant.
  std::uint64_t crl_number = 0;
  double this_update_s = 0.0;
  double next_update_s = 0.0;
  std::vector<RevocationEntry> entries;  // sorted by serial, unique
  Bytes signature;

  const RevocationEntry* Find(std::uint64_t serial) const;
  // True when `other` supersedes this list.
  bool IsOlderThan(const RevocationList& other) const {
    return std::tie(this_update_s, crl_number) <
           std::tie(other.this_update_s, other.crl_number);
  }

  bool operator==(const RevocationList&) const = default;
};

struct PolicyMappingTable {
  // Source-domain policy -> relying-party-domain policy.
  std::map<PolicyId, PolicyId> entries;
  std::uint64_t version = 0;
  std::string publisher;
  Bytes signature;

  bool operator==(const PolicyMappingTable&) const = default;
};

}  // namespace orbitpki::pki

#endif  // ORBITPKI_PKI_CERTIFICATE_H_
