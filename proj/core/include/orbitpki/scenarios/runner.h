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

#ifndef ORBITPKI_SCENARIOS_RUNNER_H_
#define ORBITPKI_SCENARIOS_RUNNER_H_

#include <span>

#include "orbitpki/scenarios/report.h"
#include "orbitpki/scenarios/scenario.h"

namespace orbitpki::scenarios {

// Runs every workload request under scenario.scheme on a fresh engine.
// Every request ends completed, dropped, or pending at duration_s.
// Throws Error(kConfiguration) listing all problems when the scenario is
// inconsistent.
LatencyReport RunScenario(const Scenario& scenario);

// Runs `base` once per scheme with identical geometry and workload.
Comparison CompareSchemes(const Scenario& base,
                          std::span<const SchemeId> schemes);

// Constants and effective settings of a run, in a fixed order.
ReportHeader MakeHeader(const Scenario& scenario);

}  // namespace orbitpki::scenarios

#endif  // ORBITPKI_SCENARIOS_RUNNER_H_
