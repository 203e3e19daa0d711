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

#include "orbitpki/geometry/visibility.h"

#include <algorithm>
#include <cmath>

#include "orbitpki/error.h"
#include "orbitpki/geometry/constants.h"

namespace orbitpki::geometry {

namespace {

constexpr double kGroundToleranceKm = 1.0;
constexpr double kInsideToleranceKm = 1e-6;

double Dot(const EciPosition& a, const EciPosition& b) {
  return a.x_km * b.x_km + a.y_km * b.y_km + a.z_km * b.z_km;
}

bool ChordClearsEarth(const EciPosition& a, const EciPosition& b,
                      double clearance_km) {
  const EciPosition d{b.x_km - a.x_km, b.y_km - a.y_km, b.z_km - a.z_km};
  const double dd = Dot(d, d);
  if (dd == 0.0) return true;
  const double s = -Dot(a, d) / dd;
  // Closest approach at an endpoint means the chord never dips below the
  // lower endpoint, which is already outside the Earth.
  if (s <= 0.0 || s >= 1.0) return true;
  const EciPosition closest{a.x_km + s * d.x_km, a.y_km + s * d.y_km,
                            a.z_km + s * d.z_km};
  return closest.Norm() >= clearance_km;
}

class WindowScanner {
 public:
  WindowScanner(const NodeGeometry& a, const NodeGeometry& b,
                const LinkOptions& options, const WindowSearchOptions& search)
      : a_(a), b_(b), options_(options), search_(search) {}

  bool Visible(double t) const { return HasLineOfSight(a_, b_, t, options_); }

  // Narrows [lo, hi] where Visible(lo) != Visible(hi) down to refine_s.
  // Returns the bracket.
  std::pair<double, double> Refine(double lo, double hi) const {
    const bool lo_state = Visible(lo);
    while (hi - lo > search_.refine_s) {
      const double mid = 0.5 * (lo + hi);
      if (Visible(mid) == lo_state) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return {lo, hi};
  }

  std::optional<VisibilityWindow> Next(double from_s, double end_s) const {
    double t = from_s;
    while (t < end_s) {
      double start = t;
      double probe = t;
      if (!Visible(t)) {
        bool found = false;
        double prev = t;
        while (prev < end_s) {
          const double next = std::min(prev + search_.step_s, end_s);
          if (Visible(next)) {
            start = Refine(prev, next).second;
            probe = next;
            found = true;
            break;
          }
          prev = next;
        }
        if (!found) return std::nullopt;
      }
      double prev = probe;
      double stop = end_s;
      while (prev < end_s) {
        const double next = std::min(prev + search_.step_s, end_s);
        if (!Visible(next)) {
          stop = Refine(prev, next).first;
          break;
        }
        prev = next;
      }
      if (stop > start) return VisibilityWindow{start, stop};
      // Degenerate sliver below the refinement resolution; skip past it.
      t = probe + search_.refine_s;
    }
    return std::nullopt;
  }

 private:
  const NodeGeometry& a_;
  const NodeGeometry& b_;
  const LinkOptions& options_;
  const WindowSearchOptions& search_;
};

void ValidateSearch(double horizon_s, const WindowSearchOptions& search) {
  if (!(horizon_s > 0.0)) {
    throw Error(ErrorCode::kDomain, "visibility horizon must be positive");
  }
  if (!(search.step_s > 0.0) || !(search.refine_s > 0.0)) {
    throw Error(ErrorCode::kDomain, "window search steps must be positive");
  }
}

}  // namespace

double ElevationDeg(const EciPosition& ground, const EciPosition& target) {
  const EciPosition d{target.x_km - ground.x_km, target.y_km - ground.y_km,
                      target.z_km - ground.z_km};
  const double range = d.Norm();
  const double up = ground.Norm();
  if (range == 0.0 || up == 0.0) return 90.0;
  const double sin_el = std::clamp(Dot(d, ground) / (range * up), -1.0, 1.0);
  return RadToDeg(std::asin(sin_el));
}

bool HasLineOfSight(const EciPosition& a, const EciPosition& b,
                    const LinkOptions& options) {
  const double ra = a.Norm();
  const double rb = b.Norm();
  if (ra < kEarthRadiusKm - kInsideToleranceKm ||
      rb < kEarthRadiusKm - kInsideToleranceKm) {
    throw Error(ErrorCode::kDomain, "line-of-sight endpoint inside the Earth");
  }
  const bool a_ground = ra - kEarthRadiusKm < kGroundToleranceKm;
  const bool b_ground = rb - kEarthRadiusKm < kGroundToleranceKm;
  if (a_ground || b_ground) {
    if (a_ground && ElevationDeg(a, b) < options.min_elevation_deg &&
        DistanceKm(a, b) > 0.0) {
      return false;
    }
    if (b_ground && ElevationDeg(b, a) < options.min_elevation_deg &&
        DistanceKm(a, b) > 0.0) {
      return false;
    }
    return true;
  }
  return ChordClearsEarth(a, b, kEarthRadiusKm + options.grazing_margin_km);
}

bool HasLineOfSight(const NodeGeometry& a, const NodeGeometry& b, double t_s,
                    const LinkOptions& options) {
  return HasLineOfSight(PositionAt(a, t_s), PositionAt(b, t_s), options);
}

std::optional<VisibilityWindow> NextVisibilityWindow(
    const NodeGeometry& a, const NodeGeometry& b, double from_s,
    double horizon_s, const LinkOptions& options,
    const WindowSearchOptions& search) {
  ValidateSearch(horizon_s, search);
  return WindowScanner(a, b, options, search).Next(from_s, from_s + horizon_s);
}

std::vector<VisibilityWindow> VisibilityWindows(
    const NodeGeometry& a, const NodeGeometry& b, double from_s,
    double horizon_s, const LinkOptions& options,
    const WindowSearchOptions& search) {
  ValidateSearch(horizon_s, search);
  const WindowScanner scanner(a, b, options, search);
  const double end_s = from_s + horizon_s;
  std::vector<VisibilityWindow> windows;
  double t = from_s;
  while (t < end_s) {
    auto window = scanner.Next(t, end_s);
    if (!window) break;
    windows.push_back(*window);
    if (window->end_s >= end_s) break;
    // Resume just past the closing boundary, which is invisible by
    // construction of the refinement bracket.
    t = window->end_s + search.refine_s;
  }
  return windows;
}

}  // namespace orbitpki::geometry
