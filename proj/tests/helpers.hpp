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

// Independent numerical oracles for the test suite. Everything here is
// deliberately implemented from first principles (quadrature, sorting,
// closed forms) rather than by calling the library under test.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "blockpeek/array_pattern.hpp"
#include "blockpeek/fading.hpp"
#include "blockpeek/matrix.hpp"
#include "blockpeek/scenario.hpp"

namespace testhelp {

// Fresnel integrals C(v), S(v) by composite Simpson quadrature. Accurate
// to ~1e-10 for |v| <= 5, plenty for cross-checking the closed-form J(v).
inline void fresnel_cs(double v, double& c_out, double& s_out) {
  const int n = 4000;  // even
  const double h = v / n;
  double c = 0.0;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = h * i;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const double arg = 0.5 * blockpeek::kPi * t * t;
    c += w * std::cos(arg);
    s += w * std::sin(arg);
  }
  c_out = c * h / 3.0;
  s_out = s * h / 3.0;
}

// Exact single knife-edge loss from the Fresnel-integral field ratio
// |E/E0| = sqrt(((1/2 - C)^2 + (1/2 - S)^2) / 2).
inline double knife_edge_exact_db(double v) {
  double c, s;
  fresnel_cs(v, c, s);
  const double re = 0.5 - c;
  const double im = 0.5 - s;
  const double amp = std::sqrt(0.5 * (re * re + im * im));
  return -20.0 * std::log10(amp);
}

// Two-sided Kolmogorov-Smirnov statistic of samples against a CDF.
template <typename Cdf>
inline double ks_statistic(std::vector<double> samples, Cdf cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - f));
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
  }
  return d;
}

// Seeded uniform [0, 1) test matrix.
inline blockpeek::Matrix random_matrix(std::uint64_t seed, std::size_t rows,
                                       std::size_t cols) {
  blockpeek::Rng rng(seed);
  blockpeek::Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform();
  return m;
}

// Closed-form 2x2 zero-sum solution for games without a saddle point:
// for [[a, b], [c, d]], denom = a - b - c + d,
// v = (a*d - b*c)/denom, x_r = ((d - c, a - b))/denom,
// x_a = ((d - b, a - c))/denom.
struct TwoByTwo {
  double value;
  double x_r0, x_r1;
  double x_a0, x_a1;
};

inline TwoByTwo solve_2x2_mixed(double a, double b, double c, double d) {
  const double denom = a - b - c + d;
  TwoByTwo out{};
  out.value = (a * d - b * c) / denom;
  out.x_r0 = (d - c) / denom;
  out.x_r1 = (a - b) / denom;
  out.x_a0 = (d - b) / denom;
  out.x_a1 = (a - c) / denom;
  return out;
}

// Strategy-payoff evaluation independent of the library's residuals:
// row player's floor min_j (x_r^T M)_j and column player's exposure
// max_i (M x_a)_i.
inline double row_guarantee(const blockpeek::Matrix& M,
                            const std::vector<double>& x_r) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < M.cols(); ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < M.rows(); ++i) acc += x_r[i] * M(i, j);
    worst = std::min(worst, acc);
  }
  return worst;
}

inline double col_exposure(const blockpeek::Matrix& M,
                           const std::vector<double>& x_a) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < M.cols(); ++j) acc += M(i, j) * x_a[j];
    best = std::max(best, acc);
  }
  return best;
}

// Dense scan of the transmit pattern. Reports half-power beamwidth, the
// first sidelobe (location and level relative to boresight), and local
// minima below a relative threshold, all from raw gain samples.
struct PatternMetrics {
  double hpbw_deg = 0.0;
  double first_sidelobe_deg = 0.0;
  double sll_db = 0.0;                // relative to boresight
  std::vector<double> minima_deg;     // minima below the threshold, in (0, 60]
};

inline PatternMetrics scan_pattern(const blockpeek::Scenario& sc, double step_deg,
                                   double minima_threshold_rel_db = -25.0) {
  const double g0 = blockpeek::array_gain_dbi(sc, 0.0);
  const int n = static_cast<int>(std::llround(90.0 / step_deg));
  std::vector<double> g(n + 1);
  for (int i = 0; i <= n; ++i)
    g[i] = blockpeek::array_gain_dbi(sc, i * step_deg);

  PatternMetrics pm;
  for (int i = 0; i <= n; ++i) {
    if (g[i] < g0 - 3.0) {
      pm.hpbw_deg = 2.0 * i * step_deg;
      break;
    }
  }
  std::vector<int> minima_idx;
  for (int i = 1; i < n; ++i)
    if (g[i] < g[i - 1] && g[i] <= g[i + 1]) minima_idx.push_back(i);
  for (int idx : minima_idx) {
    const double angle = idx * step_deg;
    if (angle <= 60.0 && g[idx] - g0 < minima_threshold_rel_db)
      pm.minima_deg.push_back(angle);
  }
  if (minima_idx.size() >= 2) {
    int best = minima_idx[0];
    for (int i = minima_idx[0]; i <= minima_idx[1]; ++i)
      if (g[i] > g[best]) best = i;
    pm.first_sidelobe_deg = best * step_deg;
    pm.sll_db = g[best] - g0;
  }
  return pm;
}

}  // namespace testhelp
