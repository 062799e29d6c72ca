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
#include <complex>
#include <stdexcept>

#include "blockpeek/polar.hpp"
#include "blockpeek/scenario.hpp"

namespace blockpeek {

// Free-space field amplitude with carrier phase,
// lambda/(4*pi*d) * e^{-j*2*pi*d/lambda}.
inline std::complex<double> free_space_amplitude(double distance_m,
                                                 double frequency_hz) {
  if (!(distance_m > 0.0))
    throw std::domain_error("free_space: distance must be > 0");
  if (!(frequency_hz > 0.0))
    throw std::domain_error("free_space: frequency must be > 0");
  const double lambda = kSpeedOfLightMps / frequency_hz;
  const double mag = lambda / (4.0 * kPi * distance_m);
  const double phase = -2.0 * kPi * distance_m / lambda;
  return std::polar(mag, phase);
}

// Dimensionless diffraction parameter for a knife edge with signed
// clearance c (negative when the edge cuts into the sight line) and
// sub-path lengths d1, d2 on either side of the edge.
inline double fresnel_parameter(double clearance_m, double d1_m, double d2_m,
                                double wavelength_m) {
  if (!(d1_m > 0.0) || !(d2_m > 0.0))
    throw std::domain_error("fresnel: sub-path lengths must be > 0");
  return -clearance_m *
         std::sqrt(2.0 * (d1_m + d2_m) / (wavelength_m * d1_m * d2_m));
}

// Single-edge approximation
//   J(v) = 6.9 + 20 log10( sqrt((v - 0.1)^2 + 1) + v - 0.1 )  for v > -0.78
// and 0 below that, clamped to be non-negative.
inline double knife_edge_j_db(double v) {
  if (v <= -0.78) return 0.0;
  const double t = v - 0.1;
  const double j = 6.9 + 20.0 * std::log10(std::sqrt(t * t + 1.0) + t);
  return j > 0.0 ? j : 0.0;
}

// Knife-edge diffraction loss in dB (>= 0) for one edge at the given
// signed clearance from the sight line.
inline double knife_edge_loss_db(double clearance_m, double d1_m, double d2_m,
                                 double wavelength_m) {
  return knife_edge_j_db(fresnel_parameter(clearance_m, d1_m, d2_m, wavelength_m));
}

}  // namespace blockpeek
