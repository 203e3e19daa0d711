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

#include "orbitpki/pki/json.h"

#include <string>

#include "orbitpki/error.h"

namespace orbitpki::pki {

using nlohmann::json;

namespace {

template <typename T>
T Field(const json& j, const char* name) {
  if (!j.contains(name)) {
    throw Error(ErrorCode::kParse, std::string("missing field '") + name + "'");
  }
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse,
                std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace

void to_json(json& j, const PublicKey& key) {
  j = json{{"algorithm", AlgorithmName(key.algorithm)},
           {"bytes", ToHex(key.bytes)}};
}

void from_json(const json& j, PublicKey& key) {
  key.algorithm = ParseAlgorithm(Field<std::string>(j, "algorithm"));
  key.bytes = FromHex(Field<std::string>(j, "bytes"));
}

void to_json(json& j, const Certificate& c) {
  j = json{{"serial", c.serial},
           {"subject", c.subject_name},
           {"issuer", c.issuer_name},
           {"public_key", c.subject_public_key},
           {"public_key_id", ToHex(c.subject_public_key_id)},
           {"not_before_s", c.not_before_s},
           {"not_after_s", c.not_after_s},
           {"is_ca", c.is_ca},
           {"policies", c.policy_ids},
           {"signature", ToHex(c.signature)}};
  if (c.path_len_constraint) j["path_len_constraint"] = *c.path_len_constraint;
  if (!c.policy_mappings.empty()) {
    json mappings = json::array();
    for (const auto& m : c.policy_mappings) {
      mappings.push_back({{"issuer_policy", m.issuer_policy},
                          {"subject_policy", m.subject_policy}});
    }
    j["policy_mappings"] = std::move(mappings);
  }
  if (c.orbital_binding) {
    const auto& b = *c.orbital_binding;
    j["orbital_binding"] = {{"altitude_km", b.altitude_km},
                            {"inclination_deg", b.inclination_deg},
                            {"raan_deg", b.raan_deg},
                            {"phase_deg", b.phase_deg},
                            {"epoch_s", b.epoch_s}};
  }
}

void from_json(const json& j, Certificate& c) {
  c = Certificate{};
  c.serial = Field<std::uint64_t>(j, "serial");
  c.subject_name = Field<std::string>(j, "subject");
  c.issuer_name = Field<std::string>(j, "issuer");
  c.subject_public_key = Field<PublicKey>(j, "public_key");
  const Bytes id = FromHex(Field<std::string>(j, "public_key_id"));
  if (id.size() != c.subject_public_key_id.size()) {
    throw Error(ErrorCode::kParse, "public_key_id must be 32 bytes");
  }
  std::copy(id.begin(), id.end(), c.subject_public_key_id.begin());
  c.not_before_s = Field<double>(j, "not_before_s");
  c.not_after_s = Field<double>(j, "not_after_s");
  c.is_ca = Field<bool>(j, "is_ca");
  c.policy_ids = j.value("policies", std::set<std::string>{});
  c.signature = FromHex(Field<std::string>(j, "signature"));
  if (j.contains("path_len_constraint")) {
    c.path_len_constraint = Field<std::uint32_t>(j, "path_len_constraint");
  }
  if (j.contains("policy_mappings")) {
    for (const auto& m : j.at("policy_mappings")) {
      c.policy_mappings.push_back(
          PolicyMapping{Field<std::string>(m, "issuer_policy"),
                        Field<std::string>(m, "subject_policy")});
    }
  }
  if (j.contains("orbital_binding")) {
    const auto& b = j.at("orbital_binding");
    c.orbital_binding = OrbitalBinding{
        Field<double>(b, "altitude_km"), b.value("inclination_deg", 0.0),
        b.value("raan_deg", 0.0), b.value("phase_deg", 0.0),
        b.value("epoch_s", 0.0)};
  }
}

void to_json(json& j, const RevocationList& crl) {
  json entries = json::array();
  for (const auto& e : crl.entries) {
    entries.push_back({{"serial", e.serial},
                       {"revocation_time_s", e.revocation_time_s},
                       {"reason", ReasonName(e.reason)}});
  }
  j = json{{"issuer", crl.issuer_name},
           {"crl_number", crl.crl_number},
           {"this_update_s", crl.this_update_s},
           {"next_update_s", crl.next_update_s},
           {"entries", std::move(entries)},
           {"signature", ToHex(crl.signature)}};
}

void from_json(const json& j, RevocationList& crl) {
  crl = RevocationList{};
  crl.issuer_name = Field<std::string>(j, "issuer");
  crl.crl_number = j.value("crl_number", std::uint64_t{0});
  crl.this_update_s = Field<double>(j, "this_update_s");
  crl.next_update_s = Field<double>(j, "next_update_s");
  if (j.contains("entries")) {
    for (const auto& e : j.at("entries")) {
      crl.entries.push_back(RevocationEntry{
          Field<std::uint64_t>(e, "serial"),
          Field<double>(e, "revocation_time_s"),
          ParseReason(e.value("reason", std::string("unspecified")))});
    }
  }
  crl.signature = FromHex(Field<std::string>(j, "signature"));
}

void to_json(json& j, const PolicyMappingTable& table) {
  j = json{{"publisher", table.publisher},
           {"version", table.version},
           {"entries", table.entries},
           {"signature", ToHex(table.signature)}};
}

void from_json(const json& j, PolicyMappingTable& table) {
  table = PolicyMappingTable{};
  table.publisher = Field<std::string>(j, "publisher");
  table.version = Field<std::uint64_t>(j, "version");
  table.entries = j.value("entries", std::map<std::string, std::string>{});
  table.signature = FromHex(Field<std::string>(j, "signature"));
}

}  // namespace orbitpki::pki
