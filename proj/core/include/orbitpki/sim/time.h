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

#ifndef ORBITPKI_SIM_TIME_H_
#define ORBITPKI_SIM_TIME_H_

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace orbitpki::sim {

// Simulation time in integer nanoseconds. Integer arithmetic keeps latency
// decompositions exact.
using SimTime = std::int64_t;

inline constexpr SimTime kNsPerSecond = 1'000'000'000;

inline SimTime FromSeconds(double s) {
  return static_cast<SimTime>(std::llround(s * 1e9));
}
inline SimTime CeilFromSeconds(double s) {
  return static_cast<SimTime>(std::ceil(s * 1e9));
}
inline double ToSeconds(SimTime t) { return static_cast<double>(t) * 1e-9; }

// Exact decimal rendering with nine fractional digits, e.g. "0.060041000".
std::string FormatSeconds(SimTime t);
// Inverse of FormatSeconds; accepts up to nine fractional digits.
// Throws Error(kParse) on malformed input.
SimTime ParseSeconds(std::string_view text);

}  // namespace orbitpki::sim

#endif  // ORBITPKI_SIM_TIME_H_
