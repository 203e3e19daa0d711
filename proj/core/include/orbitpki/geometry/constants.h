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

#ifndef ORBITPKI_GEOMETRY_CONSTANTS_H_
#define ORBITPKI_GEOMETRY_CONSTANTS_H_

namespace orbitpki::geometry {

// Physical constants used throughout the simulator. Values are fixed at
// compile time; reports echo them in their header block.
struct PhysicalConstants {
  static constexpr double kSpeedOfLightKmS = 299792.0;
  static constexpr double kEarthRadiusKm = 6371.0;
  static constexpr double kMuKm3S2 = 398600.4418;
  static constexpr double kSiderealDayS = 86164.1;
};

inline constexpr double kSpeedOfLightKmS = PhysicalConstants::kSpeedOfLightKmS;
inline constexpr double kEarthRadiusKm = PhysicalConstants::kEarthRadiusKm;
inline constexpr double kMuKm3S2 = PhysicalConstants::kMuKm3S2;
inline constexpr double kSiderealDayS = PhysicalConstants::kSiderealDayS;

inline constexpr double kGeoAltitudeKm = 35780.0;
inline constexpr double kPi = 3.14159265358979323846;

constexpr double DegToRad(double deg) { return deg * kPi / 180.0; }
constexpr double RadToDeg(double rad) { return rad * 180.0 / kPi; }

}  // namespace orbitpki::geometry

#endif  // ORBITPKI_GEOMETRY_CONSTANTS_H_
