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

#ifndef ORBITPKI_PKI_JSON_H_
#define ORBITPKI_PKI_JSON_H_

#include <nlohmann/json.hpp>

#include "orbitpki/pki/certificate.h"

// Human-readable JSON rendering of the trust artifacts. Byte fields are
// lower-case hex. Parsing failures surface as Error(kParse).
namespace orbitpki::pki {

void to_json(nlohmann::json& j, const PublicKey& key);
void from_json(const nlohmann::json& j, PublicKey& key);

void to_json(nlohmann::json& j, const Certificate& cert);
void from_json(const nlohmann::json& j, Certificate& cert);

void to_json(nlohmann::json& j, const RevocationList& crl);
void from_json(const nlohmann::json& j, RevocationList& crl);

void to_json(nlohmann::json& j, const PolicyMappingTable& table);
void from_json(const nlohmann::json& j, PolicyMappingTable& table);

}  // namespace orbitpki::pki

#endif  // ORBITPKI_PKI_JSON_H_
