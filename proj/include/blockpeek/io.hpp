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
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "blockpeek/array_pattern.hpp"
#include "blockpeek/errors.hpp"
#include "blockpeek/experiment.hpp"
#include "blockpeek/game.hpp"
#include "blockpeek/matrix.hpp"

namespace blockpeek {

// Locale-independent fixed-point formatting; all CSV numbers go through
// here so outputs are byte-stable across environments.
inline std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return std::string(buf);
}

// Quantizes a probability vector to the given decimal grid so the printed
// values sum to exactly 1. Largest-remainder apportionment; ties go to the
// lowest index so output stays deterministic.
inline std::vector<double> hamilton_round(const std::vector<double>& probs,
                                          int decimals) {
  const double scale = std::pow(10.0, decimals);
  const std::size_t n = probs.size();
  std::vector<long long> units(n);
  std::vector<double> remainder(n);
  long long assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double raw = probs[i] * scale;
    units[i] = static_cast<long long>(std::floor(raw));
    remainder[i] = raw - static_cast<double>(units[i]);
    assigned += units[i];
  }
  long long deficit = static_cast<long long>(std::llround(scale)) - assigned;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainder[a] > remainder[b];
  });
  for (std::size_t k = 0; deficit > 0 && k < n; ++k, --deficit) ++units[order[k]];
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = static_cast<double>(units[i]) / scale;
  return out;
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw IoError("write failed: " + path);
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw IoError("read failed: " + path);
  return ss.str();
}

// Azimuth-cut pattern over [-90, 90]. Data rows only; metadata lives in
// comment lines so the row count equals span/resolution + 1.
inline std::string pattern_csv(const Scenario& sc, double resolution_deg) {
  if (!(resolution_deg > 0.0 && resolution_deg <= 5.0))
    throw std::domain_error("pattern: resolution must lie in (0, 5] degrees");
  std::ostringstream os;
  os << "# azimuth cut, " << sc.array_elements_azimuth
     << " elements, spacing " << format_fixed(sc.element_spacing_wavelengths, 2)
     << " wavelengths, floor " << format_fixed(sc.gain_floor_dbi, 1) << " dBi\n";
  os << "# columns: angle_deg,gain_dbi\n";
  const int steps = static_cast<int>(std::llround(180.0 / resolution_deg));
  for (int i = 0; i <= steps; ++i) {
    const double angle = -90.0 + static_cast<double>(i) * resolution_deg;
    os << format_fixed(angle, 4) << ',' << format_fixed(array_gain_dbi(sc, angle), 4)
       << '\n';
  }
  return os.str();
}

// Payoff table with explicit header row and column of grid angles,
// 16 x 16 cells total.
inline std::string payoff_csv(const Matrix& M, const ActionGrid& grid,
                              int decimals = 4) {
  if (M.rows() != static_cast<std::size_t>(kNumActions) ||
      M.cols() != static_cast<std::size_t>(kNumActions))
    throw std::domain_error("payoff csv: matrix must match the action grid");
  std::ostringstream os;
  os << "# spectral efficiency in b/s/Hz; rows: receiver angle, columns: obstacle angle\n";
  os << "theta_r\\theta_a";
  for (int j = 0; j < kNumActions; ++j)
    os << ',' << format_fixed(grid.angles_deg[j], 4);
  os << '\n';
  for (int i = 0; i < kNumActions; ++i) {
    os << format_fixed(grid.angles_deg[i], 4);
    for (int j = 0; j < kNumActions; ++j)
      os << ',' << format_fixed(M(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), decimals);
    os << '\n';
  }
  return os.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      fields.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return fields;
}

}  // namespace detail

// Parses a numeric CSV matrix. Comment lines (#) and blank lines are
// skipped. If the first data line is non-numeric it is taken as a header
// row and the first field of every following line as a row label.
inline Matrix read_matrix_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  bool header_mode = false;
  bool first_data_line = true;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + start, end - start);
    start = end + 1;
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = detail::split_csv(line);
    if (first_data_line) {
      first_data_line = false;
      double probe;
      if (!detail::parse_double(fields.front(), probe)) {
        header_mode = true;
        continue;  // header row carries no data
      }
    }
    std::size_t begin_field = 0;
    if (header_mode) {
      if (fields.size() < 2)
        throw ParseError("matrix csv: line " + std::to_string(line_no) +
                         ": expected a row label plus data");
      begin_field = 1;
    }
    std::vector<double> row;
    row.reserve(fields.size() - begin_field);
    for (std::size_t f = begin_field; f < fields.size(); ++f) {
      double v;
      if (!detail::parse_double(fields[f], v))
        throw ParseError("matrix csv: line " + std::to_string(line_no) + ", field " +
                         std::to_string(f + 1) + ": not a number: '" +
                         std::string(detail::trim(fields[f])) + "'");
      if (!std::isfinite(v))
        throw ParseError("matrix csv: line " + std::to_string(line_no) + ", field " +
                         std::to_string(f + 1) + ": non-finite value");
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("matrix csv: line " + std::to_string(line_no) + ": expected " +
                       std::to_string(rows.front().size()) + " values, got " +
                       std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix csv: no data rows");
  Matrix M(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) M(i, j) = rows[i][j];
  return M;
}

// Long-format mean-strategy table for one player, one data row per
// (distance, action). Probabilities are quantized per distance so each
// printed group sums to exactly 1.
inline std::string heatmap_csv(const std::vector<DistanceAggregate>& aggs,
                               const ActionGrid& grid, bool receiver) {
  std::ostringstream os;
  os << "# mean " << (receiver ? "receiver" : "adversary")
     << " strategy per obstacle distance\n";
  os << "# columns: rho_a_m,theta_deg,mean_probability\n";
  for (const DistanceAggregate& agg : aggs) {
    const auto& mean = receiver ? agg.mean_strategy_r : agg.mean_strategy_a;
    const std::vector<double> q =
        hamilton_round(std::vector<double>(mean.begin(), mean.end()), 6);
    for (int k = 0; k < kNumActions; ++k) {
      os << format_fixed(agg.rho_a_m, 2) << ',' << format_fixed(grid.angles_deg[k], 4)
         << ',' << format_fixed(q[static_cast<std::size_t>(k)], 6) << '\n';
    }
  }
  return os.str();
}

// Per-distance summary curves.
inline std::string summary_csv(const std::vector<DistanceAggregate>& aggs) {
  std::ostringstream os;
  os << "# per-distance equilibrium summary\n";
  os << "# columns: rho_a_m,mean_angle_r_deg,mean_angle_a_deg,mean_value,std_value\n";
  for (const DistanceAggregate& agg : aggs) {
    os << format_fixed(agg.rho_a_m, 2) << ',' << format_fixed(agg.mean_angle_r_deg, 4)
       << ',' << format_fixed(agg.mean_angle_a_deg, 4) << ','
       << format_fixed(agg.mean_value, 4) << ',' << format_fixed(agg.std_value, 4)
       << '\n';
  }
  return os.str();
}

// Raw per-realization equilibrium dump.
inline std::string realizations_csv(const std::vector<RealizationRecord>& recs,
                                    const ActionGrid& grid) {
  std::ostringstream os;
  os << "# per-realization equilibria\n";
  os << "# columns: rho_a_m,realization,seed,value";
  for (int k = 0; k < kNumActions; ++k)
    os << ",xr_" << format_fixed(grid.angles_deg[k], 4);
  for (int k = 0; k < kNumActions; ++k)
    os << ",xa_" << format_fixed(grid.angles_deg[k], 4);
  os << '\n';
  for (const RealizationRecord& rec : recs) {
    os << format_fixed(rec.rho_a_m, 2) << ',' << rec.realization_index << ','
       << rec.seed << ',' << format_fixed(rec.eq.value, 6);
    for (double p : rec.eq.x_r.probs) os << ',' << format_fixed(p, 6);
    for (double p : rec.eq.x_a.probs) os << ',' << format_fixed(p, 6);
    os << '\n';
  }
  return os.str();
}

}  // namespace blockpeek
