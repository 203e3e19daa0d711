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

#ifndef ORBITPKI_IO_FIXTURE_JSON_H_
#define ORBITPKI_IO_FIXTURE_JSON_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbitpki/pki/certificate.h"
#include "orbitpki/trust/validator.h"

namespace orbitpki::io {

// Offline validation input: certificates, CRLs, trust anchors, and policy
// mapping tables.
struct TrustFixture {
  std::vector<pki::Certificate> anchors;
  std::vector<pki::Certificate> certificates;
  std::vector<pki::RevocationList> crls;
  std::vector<pki::PolicyMappingTable> mapping_tables;
  std::set<pki::PolicyId> required_policies;

  // Throws Error(kNotFound) when no certificate has the subject, picking the
  // highest serial when several do.
  const pki::Certificate& FindBySubject(std::string_view subject) const;
  const pki::Certificate& FindAnchor(std::string_view subject) const;

  // Policy context for a relying party anchored at `anchor`: the mapping
  // table the anchor published, if any.
  trust::PolicyContext ContextFor(const pki::Certificate& anchor) const;
};

// Problems across all entries are reported together in one
// Error(kConfiguration).
TrustFixture ParseFixture(std::string_view text,
                          const std::string& source = "<fixture>");
TrustFixture LoadFixture(const std::filesystem::path& path);
nlohmann::json FixtureToJson(const TrustFixture& fixture);

// Result rendering shared by the CLI and tests.
nlohmann::json ResultToJson(const trust::ValidationResult& result);
std::string ResultToText(const trust::ValidationResult& result);

}  // namespace orbitpki::io

#endif  // ORBITPKI_IO_FIXTURE_JSON_H_
