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
#include <stdexcept>

#include "blockpeek/polar.hpp"
#include "blockpeek/scenario.hpp"

namespace blockpeek {

// Element taper exponent for the cos^q azimuth cut. Calibrated so the
// composite pattern keeps the array-factor beamwidth and sidelobe level
// while rolling off hard by 60 degrees off boresight.
inline constexpr double kElementPatternExponent = 1.25;

// Normalized uniform linear array factor, |AF| in [0, 1]. theta measured
// from boresight (the array normal).
inline double array_factor(double theta_deg, int elements,
                           double spacing_wavelengths) {
  const double psi =
      2.0 * kPi * spacing_wavelengths * std::sin(theta_deg * kDegToRad);
  const double half = 0.5 * psi;
  const double denom = elements * std::sin(half);
  if (std::abs(denom) < 1e-12) {
    // l'Hopital limit at psi -> 2*pi*m; the grating limit is |AF| = 1.
    return std::abs(std::cos(half * elements) / std::cos(half));
  }
  return std::abs(std::sin(half * elements) / denom);
}

// Azimuth-cut array gain in dBi, floored to keep deep nulls finite.
inline double array_gain_dbi(const Scenario& sc, double theta_deg) {
  if (!(theta_deg >= -90.0 && theta_deg <= 90.0))
    throw std::domain_error("pattern: angle must lie in [-90, 90] degrees");
  const double af = array_factor(theta_deg, sc.array_elements_azimuth,
                                 sc.element_spacing_wavelengths);
  const double el = std::pow(std::abs(std::cos(theta_deg * kDegToRad)),
                             kElementPatternExponent);
  const double amp = af * el;
  if (amp <= 0.0) return sc.gain_floor_dbi;
  const double g = sc.boresight_gain_dbi + 20.0 * std::log10(amp);
  return g < sc.gain_floor_dbi ? sc.gain_floor_dbi : g;
}

}  // namespace blockpeek
