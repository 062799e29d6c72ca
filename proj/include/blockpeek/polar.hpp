// Copyright 2026 The blockpeek Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace blockpeek {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDegToRad = kPi / 180.0;

// Position of a mobile node in the transmitter-centered polar plane.
// The transmitter sits at the origin and is not represented by this type.
struct PolarPosition {
  double rho_m = 0.0;      // radial distance from the transmitter, > 0
  double theta_deg = 0.0;  // azimuth angle, within [0, 60]
};

inline void validate_position(const PolarPosition& p) {
  if (!(p.rho_m > 0.0) || !std::isfinite(p.rho_m))
    throw std::domain_error("position: rho must be finite and > 0");
  if (!(p.theta_deg >= 0.0 && p.theta_deg <= 60.0))
    throw std::domain_error("position: theta must lie in [0, 60] degrees");
}

struct Cartesian {
  double x = 0.0;
  double y = 0.0;
};

inline Cartesian to_cartesian(const PolarPosition& p) {
  const double t = p.theta_deg * kDegToRad;
  return {p.rho_m * std::cos(t), p.rho_m * std::sin(t)};
}

inline double distance(const Cartesian& a, const Cartesian& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Relation between the obstacle axis and the T-R sight line.
struct SightLineGeometry {
  double perpendicular_m = 0.0;  // unsigned distance from A's axis to the T-R line
  double along_m = 0.0;          // projection of A onto the sight line, measured from T
  double total_m = 0.0;          // |T-R|
  bool inside_segment = false;   // projection strictly between T and R
};

inline SightLineGeometry sight_line_geometry(const PolarPosition& pos_r,
                                             const PolarPosition& pos_a) {
  validate_position(pos_r);
  validate_position(pos_a);
  if (!(pos_a.rho_m < pos_r.rho_m))
    throw std::domain_error("geometry: obstacle must be closer to T than the receiver");
  const Cartesian r = to_cartesian(pos_r);
  const Cartesian a = to_cartesian(pos_a);
  SightLineGeometry g;
  g.total_m = std::hypot(r.x, r.y);
  const double ux = r.x / g.total_m;
  const double uy = r.y / g.total_m;
  g.along_m = a.x * ux + a.y * uy;
  g.perpendicular_m = std::abs(a.x * uy - a.y * ux);
  g.inside_segment = g.along_m > 0.0 && g.along_m < g.total_m;
  return g;
}

// Clearances larger than this cannot influence the link (the diffraction
// loss is identically zero well below it at these scales), so the sight
// line is reported as unconditionally clear.
inline constexpr double kFarClearanceM = 0.5;

inline constexpr double kClearSightline = std::numeric_limits<double>::infinity();

// Signed clearance between the T-R sight line and the obstacle surface.
// Negative means the line of sight is geometrically intercepted. Returns
// the +infinity sentinel when A's projection falls outside the segment or
// the obstacle is too far off-axis to matter.
inline double los_clearance(const PolarPosition& pos_r, const PolarPosition& pos_a,
                            double obstacle_radius_m) {
  const SightLineGeometry g = sight_line_geometry(pos_r, pos_a);
  if (!g.inside_segment) return kClearSightline;
  const double clearance = g.perpendicular_m - obstacle_radius_m;
  return clearance > kFarClearanceM ? kClearSightline : clearance;
}

}  // namespace blockpeek
