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

#ifndef ORBITPKI_GEOMETRY_ORBIT_H_
#define ORBITPKI_GEOMETRY_ORBIT_H_

#include <optional>
#include <variant>

namespace orbitpki::geometry {

// Earth-centered inertial position. The inertial x axis coincides with the
// Greenwich meridian at simulation time zero.
struct EciPosition {
  double x_km = 0.0;
  double y_km = 0.0;
  double z_km = 0.0;

  double Norm() const;
  bool operator==(const EciPosition&) const = default;
};

// Two-body circular orbit. Eccentricity is always zero.
struct CircularOrbit {
  double altitude_km = 0.0;
  double inclination_deg = 0.0;
  double raan_deg = 0.0;
  double phase_deg = 0.0;  // argument of latitude at epoch_s
  double epoch_s = 0.0;
  // Pins the period, used for geostationary slots so that the satellite
  // co-rotates with the Earth at the sidereal rate.
  std::optional<double> period_override_s;

  // Equatorial orbit at 35,780 km whose period is one sidereal day, placed
  // over `longitude_deg` at time zero.
  static CircularOrbit Geostationary(double longitude_deg);

  double RadiusKm() const;
  double PeriodS() const;
  bool IsGeostationary() const { return period_override_s.has_value(); }

  // Throws Error(kDomain) when a field is out of range.
  void Validate() const;
};

struct GroundSite {
  double latitude_deg = 0.0;
  double longitude_deg = 0.0;

  void Validate() const;
};

using NodeGeometry = std::variant<CircularOrbit, GroundSite>;

inline bool IsGround(const NodeGeometry& node) {
  return std::holds_alternative<GroundSite>(node);
}

// Kepler period 2*pi*sqrt(a^3/mu) for a = R_earth + altitude.
double OrbitalPeriod(double altitude_km);

EciPosition SatellitePosition(const CircularOrbit& orbit, double t_s);
EciPosition GroundPosition(const GroundSite& site, double t_s);
EciPosition PositionAt(const NodeGeometry& node, double t_s);

double DistanceKm(const EciPosition& a, const EciPosition& b);

// Signal propagation time for a straight-line path.
double OneWayLatencyS(double distance_km);

}  // namespace orbitpki::geometry

#endif  // ORBITPKI_GEOMETRY_ORBIT_H_
