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

#include <cstdint>
#include <ctime>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "blockpeek/detail/sha256.hpp"
#include "blockpeek/game.hpp"
#include "blockpeek/version.hpp"

namespace blockpeek {

inline std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
#if defined(_WIN32)
  gmtime_s(&tm_utc, &now);
#else
  gmtime_r(&now, &tm_utc);
#endif
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return std::string(buf);
}

struct ManifestFile {
  std::string name;
  std::uint64_t bytes = 0;
  std::string sha256;
};

// Provenance record emitted next to every command's outputs. The file
// inventory digests are the reproducibility contract; the timestamp is
// informational only.
struct RunManifest {
  std::string command;
  std::uint64_t seed = 0;
  std::string created_utc;
  nlohmann::ordered_json config_echo;
  std::vector<ManifestFile> files;

  void add_file(const std::string& name, std::string_view content) {
    ManifestFile f;
    f.name = name;
    f.bytes = content.size();
    f.sha256 = detail::Sha256::hex_digest(content);
    files.push_back(std::move(f));
  }
};

inline nlohmann::ordered_json manifest_to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["tool"] = "blockpeek";
  j["version"] = kVersion;
  j["command"] = m.command;
  j["seed"] = m.seed;
  j["created_utc"] = m.created_utc;
  j["config"] = m.config_echo;
  nlohmann::ordered_json files = nlohmann::ordered_json::array();
  for (const ManifestFile& f : m.files) {
    nlohmann::ordered_json e;
    e["name"] = f.name;
    e["bytes"] = f.bytes;
    e["sha256"] = f.sha256;
    files.push_back(e);
  }
  j["files"] = files;
  return j;
}

// Structured equilibrium report with support sets and deviation residuals.
inline nlohmann::ordered_json equilibrium_to_json(const Matrix& M,
                                                  const Equilibrium& eq) {
  const EquilibriumResiduals res = equilibrium_residuals(M, eq);
  nlohmann::ordered_json j;
  j["value"] = eq.value;
  j["x_r"] = eq.x_r.probs;
  j["x_a"] = eq.x_a.probs;
  j["support_r"] = support(eq.x_r);
  j["support_a"] = support(eq.x_a);
  nlohmann::ordered_json r;
  r["best_row_response"] = res.best_row_response;
  r["worst_col_response"] = res.worst_col_response;
  r["minimax_gap"] = res.minimax_gap;
  r["row_indifference"] = res.row_indifference;
  r["col_indifference"] = res.col_indifference;
  j["residuals"] = r;
  return j;
}

}  // namespace blockpeek
