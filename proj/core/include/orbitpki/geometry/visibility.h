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

#ifndef ORBITPKI_GEOMETRY_VISIBILITY_H_
#define ORBITPKI_GEOMETRY_VISIBILITY_H_

#include <optional>
#include <vector>

#include "orbitpki/geometry/orbit.h"

namespace orbitpki::geometry {

struct LinkOptions {
  // Space-to-space chords must clear the Earth by this much.
  double grazing_margin_km = 100.0;
  // Applies to links with a ground endpoint.
  double min_elevation_deg = 5.0;
};

struct WindowSearchOptions {
  double step_s = 10.0;
  double refine_s = 0.1;
};

struct VisibilityWindow {
  double start_s = 0.0;
  double end_s = 0.0;

  double DurationS() const { return end_s - start_s; }
};

// Elevation of `target` above the local horizon of `ground`, in degrees.
double ElevationDeg(const EciPosition& ground, const EciPosition& target);

// Endpoints within 1 km of the Earth's surface are treated as ground
// terminals and use the elevation mask; everything else uses the chord test.
// Throws Error(kDomain) if either endpoint lies inside the Earth.
bool HasLineOfSight(const EciPosition& a, const EciPosition& b,
                    const LinkOptions& options = {});

bool HasLineOfSight(const NodeGeometry& a, const NodeGeometry& b, double t_s,
                    const LinkOptions& options = {});

// Earliest maximal visibility interval inside [from_s, from_s + horizon_s].
// Coarse sampling at `search.step_s` followed by bisection to
// `search.refine_s`; passes shorter than one step may be missed.
std::optional<VisibilityWindow> NextVisibilityWindow(
    const NodeGeometry& a, const NodeGeometry& b, double from_s,
    double horizon_s, const LinkOptions& options = {},
    const WindowSearchOptions& search = {});

// All windows in [from_s, from_s + horizon_s], in time order.
std::vector<VisibilityWindow> VisibilityWindows(
    const NodeGeometry& a, const NodeGeometry& b, double from_s,
    double horizon_s, const LinkOptions& options = {},
    const WindowSearchOptions& search = {});

}  // namespace orbitpki::geometry

#endif  // ORBITPKI_GEOMETRY_VISIBILITY_H_
