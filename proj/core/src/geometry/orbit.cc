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

#include "orbitpki/geometry/orbit.h"

#include <cmath>
#include <string>

#include "orbitpki/error.h"
#include "orbitpki/geometry/constants.h"

namespace orbitpki::geometry {

namespace {

void RequireFinite(double value, const char* field) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kDomain, std::string(field) + " must be finite");
  }
}

}  // namespace

double EciPosition::Norm() const {
  return std::sqrt(x_km * x_km + y_km * y_km + z_km * z_km);
}

CircularOrbit CircularOrbit::Geostationary(double longitude_deg) {
  CircularOrbit orbit;
  orbit.altitude_km = kGeoAltitudeKm;
  orbit.phase_deg = std::fmod(std::fmod(longitude_deg, 360.0) + 360.0, 360.0);
  orbit.period_override_s = kSiderealDayS;
  return orbit;
}

double CircularOrbit::RadiusKm() const { return kEarthRadiusKm + altitude_km; }

double CircularOrbit::PeriodS() const {
  if (period_override_s) return *period_override_s;
  return OrbitalPeriod(altitude_km);
}

void CircularOrbit::Validate() const {
  RequireFinite(altitude_km, "altitude_km");
  RequireFinite(inclination_deg, "inclination_deg");
  RequireFinite(raan_deg, "raan_deg");
  RequireFinite(phase_deg, "phase_deg");
  RequireFinite(epoch_s, "epoch_s");
  if (altitude_km <= 0.0) {
    throw Error(ErrorCode::kDomain, "altitude_km must be positive");
  }
  if (inclination_deg < 0.0 || inclination_deg > 180.0) {
    throw Error(ErrorCode::kDomain, "inclination_deg must lie in [0, 180]");
  }
  if (raan_deg < 0.0 || raan_deg >= 360.0) {
    throw Error(ErrorCode::kDomain, "raan_deg must lie in [0, 360)");
  }
  if (phase_deg < 0.0 || phase_deg >= 360.0) {
    throw Error(ErrorCode::kDomain, "phase_deg must lie in [0, 360)");
  }
  if (epoch_s < 0.0) {
    throw Error(ErrorCode::kDomain, "epoch_s must be non-negative");
  }
  if (period_override_s && !(*period_override_s > 0.0)) {
    throw Error(ErrorCode::kDomain, "period override must be positive");
  }
}

void GroundSite::Validate() const {
  RequireFinite(latitude_deg, "latitude_deg");
  RequireFinite(longitude_deg, "longitude_deg");
  if (latitude_deg < -90.0 || latitude_deg > 90.0) {
    throw Error(ErrorCode::kDomain, "latitude_deg must lie in [-90, 90]");
  }
  if (longitude_deg < -180.0 || longitude_deg >= 180.0) {
    throw Error(ErrorCode::kDomain, "longitude_deg must lie in [-180, 180)");
  }
}

double OrbitalPeriod(double altitude_km) {
  if (!(altitude_km > 0.0)) {
    throw Error(ErrorCode::kDomain, "orbital period requires altitude > 0");
  }
  const double a = kEarthRadiusKm + altitude_km;
  return 2.0 * kPi * std::sqrt(a * a * a / kMuKm3S2);
}

EciPosition SatellitePosition(const CircularOrbit& orbit, double t_s) {
  const double r = orbit.RadiusKm();
  const double u = DegToRad(orbit.phase_deg) +
                   2.0 * kPi * (t_s - orbit.epoch_s) / orbit.PeriodS();
  const double inc = DegToRad(orbit.inclination_deg);
  const double raan = DegToRad(orbit.raan_deg);

  // In-plane position, then rotate by inclination about x and by RAAN
  // about z.
  const double xp = r * std::cos(u);
  const double yp = r * std::sin(u);
  const double y1 = yp * std::cos(inc);
  const double z1 = yp * std::sin(inc);
  return EciPosition{xp * std::cos(raan) - y1 * std::sin(raan),
                     xp * std::sin(raan) + y1 * std::cos(raan), z1};
}

EciPosition GroundPosition(const GroundSite& site, double t_s) {
  const double lat = DegToRad(site.latitude_deg);
  const double lon =
      DegToRad(site.longitude_deg) + 2.0 * kPi * t_s / kSiderealDayS;
  return EciPosition{kEarthRadiusKm * std::cos(lat) * std::cos(lon),
                     kEarthRadiusKm * std::cos(lat) * std::sin(lon),
                     kEarthRadiusKm * std::sin(lat)};
}

EciPosition PositionAt(const NodeGeometry& node, double t_s) {
  if (const auto* orbit = std::get_if<CircularOrbit>(&node)) {
    return SatellitePosition(*orbit, t_s);
  }
  return GroundPosition(std::get<GroundSite>(node), t_s);
}

double DistanceKm(const EciPosition& a, const EciPosition& b) {
  const double dx = a.x_km - b.x_km;
  const double dy = a.y_km - b.y_km;
  const double dz = a.z_km - b.z_km;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double OneWayLatencyS(double distance_km) {
  if (!(distance_km >= 0.0)) {
    throw Error(ErrorCode::kDomain, "distance must be non-negative");
  }
  return distance_km / kSpeedOfLightKmS;
}

}  // namespace orbitpki::geometry
