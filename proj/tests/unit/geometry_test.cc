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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "orbitpki/error.h"
#include "orbitpki/geometry/constants.h"
#include "orbitpki/geometry/orbit.h"
#include "orbitpki/geometry/visibility.h"

namespace orbitpki::geometry {
namespace {

CircularOrbit Orbit(double alt, double inc = 0, double raan = 0,
                    double phase = 0) {
  CircularOrbit o;
  o.altitude_km = alt;
  o.inclination_deg = inc;
  o.raan_deg = raan;
  o.phase_deg = phase;
  return o;
}

void ExpectNear(const EciPosition& p, double x, double y, double z,
                double tol = 1e-6) {
  EXPECT_NEAR(p.x_km, x, tol);
  EXPECT_NEAR(p.y_km, y, tol);
  EXPECT_NEAR(p.z_km, z, tol);
}

TEST(OrbitalPeriodTest, GpsAltitudeIsAboutTwelveHours) {
  const double period = OrbitalPeriod(20200.0);
  EXPECT_NEAR(period, 43104.52, 0.01);
  EXPECT_NEAR(period / 43200.0, 1.0, 0.02);
}

TEST(OrbitalPeriodTest, LowOrbitWithinNinetyToOneTwentyMinutes) {
  const double period = OrbitalPeriod(500.0);
  EXPECT_NEAR(period, 5668.14, 0.01);
  EXPECT_GE(period, 90 * 60.0);
  EXPECT_LE(period, 120 * 60.0);
}

TEST(OrbitalPeriodTest, GeostationaryAltitudeMatchesSiderealDay) {
  EXPECT_NEAR(OrbitalPeriod(kGeoAltitudeKm) / kSiderealDayS, 1.0, 0.01);
}

TEST(OrbitalPeriodTest, RejectsNonPositiveAltitude) {
  EXPECT_THROW(OrbitalPeriod(0.0), Error);
  EXPECT_THROW(OrbitalPeriod(-10.0), Error);
}

TEST(SatellitePositionTest, EpochPhaseZeroOnReferenceAxis) {
  const auto o = Orbit(1000);
  ExpectNear(SatellitePosition(o, 0), 7371, 0, 0);
  ExpectNear(SatellitePosition(o, o.PeriodS() / 2), -7371, 0, 0);
}

TEST(SatellitePositionTest, PolarQuarterRevolution) {
  const auto o = Orbit(500, 90);
  ExpectNear(SatellitePosition(o, o.PeriodS() / 4), 0, 0, 6871);
}

TEST(SatellitePositionTest, GeostationaryTracksGroundMeridian) {
  const auto geo = CircularOrbit::Geostationary(30.0);
  const GroundSite site{0.0, 30.0};
  for (double t : {0.0, 3600.0, 43000.0, 7 * 86400.0}) {
    const auto g = GroundPosition(site, t);
    const auto s = SatellitePosition(geo, t);
    // Co-radial at every instant.
    EXPECT_NEAR(DistanceKm(g, s), kGeoAltitudeKm, 1e-6) << t;
  }
}

TEST(GroundPositionTest, ReferencePoints) {
  ExpectNear(GroundPosition({0, 0}, 0), 6371, 0, 0);
  ExpectNear(GroundPosition({0, -180}, 0), -6371, 0, 0, 1e-9);
  for (double t : {0.0, 1234.5, 86400.0}) {
    ExpectNear(GroundPosition({90, 45}, t), 0, 0, 6371, 1e-9);
  }
}

TEST(GroundPositionTest, RotatesOncePerSiderealDay) {
  const GroundSite site{45, 10};
  const auto a = GroundPosition(site, 100);
  const auto b = GroundPosition(site, 100 + kSiderealDayS);
  EXPECT_LT(DistanceKm(a, b), 1e-6);
  EXPECT_NEAR(a.Norm(), kEarthRadiusKm, 1e-9);
}

TEST(DistanceTest, Examples) {
  const auto leo = SatellitePosition(Orbit(1000), 0);
  const auto geo = SatellitePosition(CircularOrbit::Geostationary(0), 0);
  EXPECT_NEAR(DistanceKm(leo, geo), 34780.0, 1e-6);
  EXPECT_EQ(DistanceKm(leo, leo), 0.0);
  const auto quarter = SatellitePosition(Orbit(1000, 0, 0, 90), 0);
  // Chord 2r sin(45 deg).
  EXPECT_NEAR(DistanceKm(leo, quarter), 10424.17, 0.01);
}

TEST(LineOfSightTest, Examples) {
  const auto a = SatellitePosition(Orbit(500), 0);
  const auto b = SatellitePosition(Orbit(500, 0, 0, 180), 0);
  EXPECT_FALSE(HasLineOfSight(a, b));

  const auto leo = SatellitePosition(Orbit(1000), 0);
  const auto geo = SatellitePosition(CircularOrbit::Geostationary(0), 0);
  EXPECT_TRUE(HasLineOfSight(leo, geo));

  const auto site = GroundPosition({0, 0}, 0);
  const auto far_geo =
      SatellitePosition(CircularOrbit::Geostationary(120), 0);
  EXPECT_FALSE(HasLineOfSight(site, far_geo));
  EXPECT_TRUE(HasLineOfSight(site, geo));
}

TEST(LineOfSightTest, GeoVisibilityConeHalfWidth) {
  // Hand calculation: elevation 5 deg is reached at a central angle of
  // acos(R cos 5 / r) - 5 = 76.3 deg from the sub-satellite point.
  const auto geo = SatellitePosition(CircularOrbit::Geostationary(0), 0);
  EXPECT_TRUE(HasLineOfSight(GroundPosition({0, 76.0}, 0), geo));
  EXPECT_FALSE(HasLineOfSight(GroundPosition({0, 76.6}, 0), geo));
  EXPECT_NEAR(ElevationDeg(GroundPosition({0, 0}, 0), geo), 90.0, 1e-9);
}

TEST(LineOfSightTest, EndpointInsideEarthIsDomainError) {
  EXPECT_THROW(HasLineOfSight(EciPosition{100, 0, 0}, EciPosition{8000, 0, 0}),
               Error);
}

TEST(LineOfSightTest, GrazingMarginIsConfigurable) {
  // Chord between two 500 km satellites whose midpoint sits 50 km above
  // the surface: allowed with no margin, blocked with the default 100 km.
  const double r = kEarthRadiusKm + 500;
  const double half = std::acos((kEarthRadiusKm + 50) / r);
  const EciPosition a{r * std::cos(half), r * std::sin(half), 0};
  const EciPosition b{r * std::cos(half), -r * std::sin(half), 0};
  EXPECT_FALSE(HasLineOfSight(a, b));
  EXPECT_TRUE(HasLineOfSight(a, b, LinkOptions{0.0, 5.0}));
}

TEST(LatencyTest, Examples) {
  EXPECT_NEAR(OneWayLatencyS(34780), 0.11601, 1e-5);
  EXPECT_NEAR(2 * OneWayLatencyS(34780), 0.232, 0.001);
  EXPECT_NEAR(OneWayLatencyS(9000), 0.03002, 1e-5);
  EXPECT_EQ(OneWayLatencyS(0), 0.0);
  EXPECT_THROW(OneWayLatencyS(-1), Error);
}

TEST(VisibilityWindowTest, LowOrbitPassDurations) {
  const NodeGeometry sat = Orbit(500);
  const NodeGeometry site = GroundSite{0, 0};
  const auto windows = VisibilityWindows(sat, site, 0, 86400);
  ASSERT_GE(windows.size(), 5u);
  for (const auto& w : windows) {
    if (w.start_s == 0 || w.end_s >= 86400) continue;  // clipped by horizon
    EXPECT_GE(w.DurationS(), 5 * 60.0);
    EXPECT_LE(w.DurationS(), 12 * 60.0);
  }
}

TEST(VisibilityWindowTest, GeostationaryWindowSpansHorizon) {
  const NodeGeometry geo = CircularOrbit::Geostationary(0);
  const NodeGeometry site = GroundSite{45, 10};
  const auto w = NextVisibilityWindow(geo, site, 0, 3 * 86400);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->start_s, 0.0);
  EXPECT_EQ(w->end_s, 3 * 86400.0);
}

TEST(VisibilityWindowTest, CoLocatedSatellitesAlwaysVisible) {
  const NodeGeometry a = Orbit(700, 53, 10, 20);
  const auto w = NextVisibilityWindow(a, a, 50, 10000);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->start_s, 50.0);
  EXPECT_EQ(w->end_s, 10050.0);
}

TEST(VisibilityWindowTest, PolarSiteNeverSeesGeo) {
  const NodeGeometry geo = CircularOrbit::Geostationary(0);
  const NodeGeometry pole = GroundSite{90, 0};
  EXPECT_FALSE(NextVisibilityWindow(geo, pole, 0, 86400).has_value());
}

TEST(VisibilityWindowTest, RejectsNonPositiveHorizon) {
  const NodeGeometry a = Orbit(700);
  EXPECT_THROW(NextVisibilityWindow(a, a, 0, 0), Error);
}

// Properties over random orbits and times.
class GeometryPropertyTest : public ::testing::Test {
 protected:
  CircularOrbit RandomOrbit() {
    std::uniform_real_distribution<double> alt(160, 40000), inc(0, 180),
        ang(0, 359.999);
    return Orbit(alt(rng_), inc(rng_), ang(rng_), ang(rng_));
  }
  std::mt19937_64 rng_{20261016};
};

TEST_F(GeometryPropertyTest, RadiusConservationAndPeriodicity) {
  std::uniform_real_distribution<double> time(0, 30 * 86400.0);
  for (int i = 0; i < 500; ++i) {
    const auto o = RandomOrbit();
    const double t = time(rng_);
    const auto p = SatellitePosition(o, t);
    EXPECT_LT(std::abs(p.Norm() - o.RadiusKm()), 1e-3);
    EXPECT_LT(std::abs(p.Norm() - o.RadiusKm()) / o.RadiusKm(), 1e-6);
    EXPECT_LT(DistanceKm(p, SatellitePosition(o, t + o.PeriodS())), 1e-3);
  }
}

TEST_F(GeometryPropertyTest, SymmetryAndLatencyLinearity) {
  std::uniform_real_distribution<double> time(0, 86400.0), k(0, 100);
  for (int i = 0; i < 500; ++i) {
    const double t = time(rng_);
    const auto a = SatellitePosition(RandomOrbit(), t);
    const auto b = SatellitePosition(RandomOrbit(), t);
    EXPECT_EQ(DistanceKm(a, b), DistanceKm(b, a));
    EXPECT_EQ(HasLineOfSight(a, b), HasLineOfSight(b, a));
    const double d = DistanceKm(a, b);
    const double scale = k(rng_);
    EXPECT_NEAR(OneWayLatencyS(scale * d), scale * OneWayLatencyS(d),
                4 * std::numeric_limits<double>::epsilon() *
                    OneWayLatencyS(scale * d));
  }
}

TEST_F(GeometryPropertyTest, WindowSoundness) {
  const WindowSearchOptions search;
  for (int i = 0; i < 20; ++i) {
    CircularOrbit o = RandomOrbit();
    o.altitude_km = 300 + std::fmod(o.altitude_km, 2000);
    const NodeGeometry sat = o;
    const NodeGeometry site = GroundSite{std::fmod(o.raan_deg, 120) - 60, 0};
    for (const auto& w : VisibilityWindows(sat, site, 0, 86400)) {
      ASSERT_LT(w.start_s, w.end_s);
      EXPECT_TRUE(HasLineOfSight(sat, site, 0.5 * (w.start_s + w.end_s)));
      if (w.start_s > 2 * search.step_s) {
        EXPECT_FALSE(
            HasLineOfSight(sat, site, w.start_s - 2 * search.refine_s));
      }
      if (w.end_s < 86400) {
        EXPECT_FALSE(HasLineOfSight(sat, site, w.end_s + 2 * search.refine_s));
      }
    }
  }
}

TEST(RevisitTest, InclinedLeoRevisitsMidLatitudeStationWithinBound) {
  const NodeGeometry sat = Orbit(500, 53);
  const NodeGeometry site = GroundSite{45, 0};
  const double horizon = 7 * 86400.0;
  const auto windows = VisibilityWindows(sat, site, 0, horizon);
  ASSERT_FALSE(windows.empty());
  double max_gap = windows.front().start_s;
  for (std::size_t i = 1; i < windows.size(); ++i) {
    max_gap = std::max(max_gap, windows[i].start_s - windows[i - 1].end_s);
  }
  max_gap = std::max(max_gap, horizon - windows.back().end_s);
  EXPECT_LE(max_gap, 25 * 3600.0);
}

}  // namespace
}  // namespace orbitpki::geometry
