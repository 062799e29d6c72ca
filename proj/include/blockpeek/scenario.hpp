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
#include <optional>
#include <stdexcept>

#include "blockpeek/polar.hpp"

namespace blockpeek {

inline constexpr double kSpeedOfLightMps = 299792458.0;

// Backoff of the calibrated bistatic scatter budget relative to the clear
// boresight link at the anchor geometry. Keeps the detour path weak enough
// that standing in the beam is never the obstacle's best move.
inline constexpr double kScatterBackoffDb = 25.0;

// Physical and radio parameters shared by every computation. Defaults
// describe the desk-scale 60 GHz link the acceptance suite is tuned to.
struct Scenario {
  double frequency_hz = 60.0e9;
  double tx_power_dbm = 0.0;
  double noise_power_dbm = -100.0;

  double rho_r_m = 3.0;  // receiver ring radius
  double rho_a_m = 1.5;  // obstacle ring radius

  int array_elements_azimuth = 8;
  int array_elements_elevation = 4;
  double element_spacing_wavelengths = 0.5;
  double boresight_gain_dbi = 20.0;

  double obstacle_radius_m = 0.25;
  double obstacle_height_m = 1.75;
  double antenna_height_m = 1.0;

  double fading_mean_power_db = -97.0;
  bool fading_enabled = true;
  // When false, one fading draw per realization is shared by all payoff
  // cells instead of drawing independently per cell.
  bool per_cell_fading = true;

  // Overrides the calibrated bistatic budget when set.
  std::optional<double> scatter_coefficient;

  double gain_floor_dbi = -40.0;

  double wavelength_m() const { return kSpeedOfLightMps / frequency_hz; }

  // Linear transmit-power to noise-power ratio.
  double snr_scale() const {
    return std::pow(10.0, (tx_power_dbm - noise_power_dbm) / 10.0);
  }

  // Linear mean power of the diffuse fading term, or 0 when disabled.
  double fading_mean_power() const {
    if (!fading_enabled) return 0.0;
    return std::pow(10.0, fading_mean_power_db / 10.0);
  }

  // Effective broadside radar cross section of the cylindrical obstacle,
  // truncated at twice the antenna height.
  double broadside_rcs_m2() const {
    const double h_eff = std::min(obstacle_height_m, 2.0 * antenna_height_m);
    return 2.0 * kPi * obstacle_radius_m * h_eff * h_eff / wavelength_m();
  }

  // Bistatic budget coefficient. Calibrated so that at the anchor geometry
  // (obstacle halfway out on the boresight, fully aligned) the scattered
  // power sits kScatterBackoffDb below the clear direct link. The antenna
  // gain enters both links identically there and cancels.
  double scatter_kappa() const {
    if (scatter_coefficient) return *scatter_coefficient;
    const double ra = std::min(rho_a_m, 0.5 * rho_r_m);
    const double lam = wavelength_m();
    const double sigma0 = broadside_rcs_m2();
    const double d_ta = ra;
    const double d_ar = rho_r_m - ra;
    const double backoff = std::pow(10.0, -kScatterBackoffDb / 10.0);
    // |r2/r1|^2 = kappa * sigma0 * rho_R^2 / (4*pi * d_ta^2 * d_ar^2)
    return backoff * 4.0 * kPi * d_ta * d_ta * d_ar * d_ar /
           (rho_r_m * rho_r_m * sigma0);
  }

  void validate() const {
    if (!(frequency_hz > 0.0)) throw std::domain_error("scenario: frequency must be > 0");
    if (!std::isfinite(tx_power_dbm) || !std::isfinite(noise_power_dbm) ||
        !std::isfinite(fading_mean_power_db) || !std::isfinite(boresight_gain_dbi) ||
        !std::isfinite(gain_floor_dbi))
      throw std::domain_error("scenario: power and gain levels must be finite");
    if (!(fading_mean_power_db < 0.0))
      throw std::domain_error("scenario: fading mean power must be below 0 dB");
    if (!(rho_r_m > 0.0)) throw std::domain_error("scenario: rho_r must be > 0");
    if (!(rho_a_m > 0.0)) throw std::domain_error("scenario: rho_a must be > 0");
    if (!(rho_a_m < rho_r_m))
      throw std::domain_error("scenario: rho_a must be smaller than rho_r");
    if (array_elements_azimuth < 1)
      throw std::domain_error("scenario: azimuth array needs at least one element");
    if (array_elements_elevation < 1)
      throw std::domain_error("scenario: elevation array needs at least one element");
    if (!(element_spacing_wavelengths > 0.0))
      throw std::domain_error("scenario: element spacing must be > 0");
    if (!(obstacle_radius_m > 0.0))
      throw std::domain_error("scenario: obstacle radius must be > 0");
    if (!(obstacle_radius_m < rho_a_m))
      throw std::domain_error("scenario: obstacle radius must be smaller than rho_a");
    if (!(obstacle_height_m > 0.0))
      throw std::domain_error("scenario: obstacle height must be > 0");
    if (!(antenna_height_m > 0.0))
      throw std::domain_error("scenario: antenna height must be > 0");
    if (scatter_coefficient && !(*scatter_coefficient >= 0.0))
      throw std::domain_error("scenario: scatter coefficient must be >= 0");
  }
};

}  // namespace blockpeek
