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

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "blockpeek/array_pattern.hpp"
#include "blockpeek/polar.hpp"
#include "blockpeek/propagation.hpp"
#include "blockpeek/scenario.hpp"

namespace blockpeek {

// One narrowband channel draw. r12 is the deterministic part (attenuated
// sight line r1 plus obstacle detour r2), r3 the diffuse residue; the
// breakdown fields are diagnostics. |total()|^2 times the scenario SNR
// scale is the receiver SNR.
struct ChannelSample {
  std::complex<double> r12{0.0, 0.0};
  std::complex<double> r3{0.0, 0.0};

  std::complex<double> r1{0.0, 0.0};  // diffraction-attenuated sight line
  std::complex<double> r2{0.0, 0.0};  // bistatic detour off the obstacle
  double blockage_loss_db = 0.0;      // loss applied to r1

  std::complex<double> total() const { return r12 + r3; }
};

// Linear power multiplier (<= 1) on the sight line from the obstacle's two
// lateral edges. The near edge carries the signed clearance p - a, the far
// edge is always intercepted at -(p + a); both contributions power-sum and
// the total never exceeds the clear link.
inline double blockage_power_factor(const Scenario& sc, const PolarPosition& pos_r,
                                    const PolarPosition& pos_a) {
  const SightLineGeometry g = sight_line_geometry(pos_r, pos_a);
  if (!g.inside_segment) return 1.0;
  const double near_clear = g.perpendicular_m - sc.obstacle_radius_m;
  if (near_clear > kFarClearanceM) return 1.0;
  const double d1 = g.along_m;
  const double d2 = g.total_m - g.along_m;
  const double lam = sc.wavelength_m();
  const double far_clear = -(g.perpendicular_m + sc.obstacle_radius_m);
  const double j_near = knife_edge_loss_db(near_clear, d1, d2, lam);
  const double j_far = knife_edge_loss_db(far_clear, d1, d2, lam);
  const double p = std::pow(10.0, -j_near / 10.0) + std::pow(10.0, -j_far / 10.0);
  return std::min(p, 1.0);
}

// Field scattered off the obstacle toward the receiver (r2). The detour is
// a forward-scatter lobe: full strength when the leg T->A continues
// straight on toward R, falling off as cos^2 of the bend angle and
// vanishing once the path folds back by 90 degrees or more.
inline std::complex<double> scattered_component(const Scenario& sc,
                                                const PolarPosition& pos_r,
                                                const PolarPosition& pos_a) {
  validate_position(pos_r);
  validate_position(pos_a);
  const Cartesian r = to_cartesian(pos_r);
  const Cartesian a = to_cartesian(pos_a);
  const double d_ar = distance(a, r);
  if (d_ar == 0.0)
    throw std::domain_error("scatter: receiver and obstacle are coincident");
  if (!(pos_a.rho_m < pos_r.rho_m))
    throw std::domain_error("scatter: obstacle must be closer to T than the receiver");
  const double d_ta = pos_a.rho_m;
  const double cos_bend = (a.x * (r.x - a.x) + a.y * (r.y - a.y)) / (d_ta * d_ar);
  if (cos_bend <= 0.0) return {0.0, 0.0};
  const double lobe = cos_bend * cos_bend;
  const double g_lin = std::pow(10.0, array_gain_dbi(sc, pos_a.theta_deg) / 10.0);
  const double lam = sc.wavelength_m();
  const double four_pi = 4.0 * kPi;
  const double p2 = sc.scatter_kappa() * g_lin * lam * lam * sc.broadside_rcs_m2() *
                    lobe / (four_pi * four_pi * four_pi * d_ta * d_ta * d_ar * d_ar);
  const double phase = -2.0 * kPi * (d_ta + d_ar) / lam;
  return std::polar(std::sqrt(p2), phase);
}

// Full three-term channel draw for a receiver at pos_r with the obstacle
// at pos_a. The caller supplies r3 so that draw granularity stays a policy
// of the experiment layer.
inline ChannelSample channel_sample(const Scenario& sc, const PolarPosition& pos_r,
                                    const PolarPosition& pos_a,
                                    std::complex<double> r3 = {0.0, 0.0}) {
  validate_position(pos_r);
  validate_position(pos_a);
  ChannelSample out;
  const double g_amp =
      std::pow(10.0, array_gain_dbi(sc, pos_r.theta_deg) / 20.0);
  const double factor = blockage_power_factor(sc, pos_r, pos_a);
  out.r1 = g_amp * std::sqrt(factor) *
           free_space_amplitude(pos_r.rho_m, sc.frequency_hz);
  out.blockage_loss_db = -10.0 * std::log10(factor);
  out.r2 = scattered_component(sc, pos_r, pos_a);
  out.r12 = out.r1 + out.r2;
  out.r3 = r3;
  return out;
}

// Obstacle-free variant: clear sight line, no detour path.
inline ChannelSample channel_sample_unobstructed(
    const Scenario& sc, const PolarPosition& pos_r,
    std::complex<double> r3 = {0.0, 0.0}) {
  validate_position(pos_r);
  ChannelSample out;
  const double g_amp =
      std::pow(10.0, array_gain_dbi(sc, pos_r.theta_deg) / 20.0);
  out.r1 = g_amp * free_space_amplitude(pos_r.rho_m, sc.frequency_hz);
  out.r12 = out.r1;
  out.r3 = r3;
  return out;
}

// Shannon spectral efficiency of one draw, in bit/s/Hz.
inline double spectral_efficiency(const Scenario& sc, const ChannelSample& s) {
  const double snr = sc.snr_scale() * std::norm(s.total());
  return std::log1p(snr) / std::log(2.0);
}

}  // namespace blockpeek
