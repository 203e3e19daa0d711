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

#ifndef ORBITPKI_IO_SCENARIO_JSON_H_
#define ORBITPKI_IO_SCENARIO_JSON_H_

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "orbitpki/scenarios/scenario.h"

namespace orbitpki::io {

// Parses and validates a scenario document. Syntax errors carry the line and
// column; structural and semantic problems are collected and reported
// together in one Error(kConfiguration). `source` names the document in
// messages.
scenarios::Scenario ParseScenario(std::string_view text,
                                  const std::string& source = "<scenario>");
// Throws Error(kIo) when the file cannot be read.
scenarios::Scenario LoadScenario(const std::filesystem::path& path);

// Fully explicit document; ParseScenario(ScenarioToJson(s).dump()) == s.
nlohmann::json ScenarioToJson(const scenarios::Scenario& scenario);

// Reads a whole file. Throws Error(kIo) with the path on failure.
std::string ReadFile(const std::filesystem::path& path);

}  // namespace orbitpki::io

#endif  // ORBITPKI_IO_SCENARIO_JSON_H_
