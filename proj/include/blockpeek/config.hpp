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

#include <string>

#include <json.hpp>

#include "blockpeek/errors.hpp"
#include "blockpeek/experiment.hpp"
#include "blockpeek/io.hpp"
#include "blockpeek/scenario.hpp"

namespace blockpeek {

namespace detail {

inline double as_number(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number())
    throw ParseError("config: key '" + key + "' must be a number");
  return v.get<double>();
}

inline int as_count(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer())
    throw ParseError("config: key '" + key + "' must be an integer");
  return v.get<int>();
}

inline bool as_bool(const nlohmann::json& v, const std::string& key) {
  if (!v.is_boolean())
    throw ParseError("config: key '" + key + "' must be a boolean");
  return v.get<bool>();
}

}  // namespace detail

// Flat JSON configuration. Every field is optional and falls back to the
// scenario/sweep defaults; unknown keys are rejected so typos in physics
// parameters cannot silently revert to defaults.
inline SweepConfig parse_config_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config: top level must be a JSON object");

  SweepConfig cfg;
  Scenario& sc = cfg.scenario;
  for (const auto& [key, value] : j.items()) {
    if (key == "frequency_hz") sc.frequency_hz = detail::as_number(value, key);
    else if (key == "tx_power_dbm") sc.tx_power_dbm = detail::as_number(value, key);
    else if (key == "noise_power_dbm") sc.noise_power_dbm = detail::as_number(value, key);
    else if (key == "rho_r_m") sc.rho_r_m = detail::as_number(value, key);
    else if (key == "rho_a_m") sc.rho_a_m = detail::as_number(value, key);
    else if (key == "array_elements_azimuth") sc.array_elements_azimuth = detail::as_count(value, key);
    else if (key == "array_elements_elevation") sc.array_elements_elevation = detail::as_count(value, key);
    else if (key == "element_spacing_wavelengths") sc.element_spacing_wavelengths = detail::as_number(value, key);
    else if (key == "boresight_gain_dbi") sc.boresight_gain_dbi = detail::as_number(value, key);
    else if (key == "obstacle_radius_m") sc.obstacle_radius_m = detail::as_number(value, key);
    else if (key == "obstacle_height_m") sc.obstacle_height_m = detail::as_number(value, key);
    else if (key == "antenna_height_m") sc.antenna_height_m = detail::as_number(value, key);
    else if (key == "fading_mean_power_db") sc.fading_mean_power_db = detail::as_number(value, key);
    else if (key == "fading_enabled") sc.fading_enabled = detail::as_bool(value, key);
    else if (key == "per_cell_fading") sc.per_cell_fading = detail::as_bool(value, key);
    else if (key == "gain_floor_dbi") sc.gain_floor_dbi = detail::as_number(value, key);
    else if (key == "scatter_coefficient") {
      if (value.is_null()) sc.scatter_coefficient.reset();
      else sc.scatter_coefficient = detail::as_number(value, key);
    } else if (key == "distances_m") {
      if (!value.is_array() || value.empty())
        throw ParseError("config: key 'distances_m' must be a non-empty array of numbers");
      cfg.distances_m.clear();
      for (const auto& d : value) cfg.distances_m.push_back(detail::as_number(d, key));
    } else if (key == "realizations") {
      cfg.realizations = detail::as_count(value, key);
    } else if (key == "master_seed") {
      if (!value.is_number_integer())
        throw ParseError("config: key 'master_seed' must be an integer");
      cfg.master_seed = value.get<std::uint64_t>();
    } else {
      throw ParseError("config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

inline SweepConfig load_config_file(const std::string& path) {
  return parse_config_json(read_file(path));
}

// Configuration echo for manifests, in a fixed key order.
inline nlohmann::ordered_json config_echo_json(const SweepConfig& cfg) {
  const Scenario& sc = cfg.scenario;
  nlohmann::ordered_json j;
  j["frequency_hz"] = sc.frequency_hz;
  j["tx_power_dbm"] = sc.tx_power_dbm;
  j["noise_power_dbm"] = sc.noise_power_dbm;
  j["rho_r_m"] = sc.rho_r_m;
  j["rho_a_m"] = sc.rho_a_m;
  j["array_elements_azimuth"] = sc.array_elements_azimuth;
  j["array_elements_elevation"] = sc.array_elements_elevation;
  j["element_spacing_wavelengths"] = sc.element_spacing_wavelengths;
  j["boresight_gain_dbi"] = sc.boresight_gain_dbi;
  j["obstacle_radius_m"] = sc.obstacle_radius_m;
  j["obstacle_height_m"] = sc.obstacle_height_m;
  j["antenna_height_m"] = sc.antenna_height_m;
  j["fading_mean_power_db"] = sc.fading_mean_power_db;
  j["fading_enabled"] = sc.fading_enabled;
  j["per_cell_fading"] = sc.per_cell_fading;
  if (sc.scatter_coefficient) j["scatter_coefficient"] = *sc.scatter_coefficient;
  else j["scatter_coefficient"] = nullptr;
  j["gain_floor_dbi"] = sc.gain_floor_dbi;
  j["distances_m"] = cfg.distances_m;
  j["realizations"] = cfg.realizations;
  j["master_seed"] = cfg.master_seed;
  return j;
}

}  // namespace blockpeek
