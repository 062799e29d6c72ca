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
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <sstream>
#include <vector>

#include "blockpeek/channel.hpp"
#include "blockpeek/errors.hpp"
#include "blockpeek/fading.hpp"
#include "blockpeek/matrix.hpp"
#include "blockpeek/scenario.hpp"

namespace blockpeek {

inline constexpr int kNumActions = 15;

// Shared angular action set: 15 rays fanned uniformly across the sector.
struct ActionGrid {
  std::array<double, kNumActions> angles_deg{};
};

inline ActionGrid action_grid() {
  ActionGrid g;
  for (int k = 0; k < kNumActions; ++k) g.angles_deg[k] = k * (30.0 / 7.0);
  return g;
}

// Diffuse fading term per payoff cell, row-major receiver x adversary.
using FadingField = std::vector<std::complex<double>>;

// Draws one realization of the fading field. Per-cell draws by default;
// with per_cell_fading off a single draw is shared by every cell.
inline FadingField fading_field(const Scenario& sc, Rng& rng) {
  FadingField field(static_cast<std::size_t>(kNumActions) * kNumActions);
  const double power = sc.fading_mean_power();
  if (sc.per_cell_fading) {
    for (auto& v : field) v = draw_fading(rng, power);
  } else {
    const std::complex<double> shared = draw_fading(rng, power);
    std::fill(field.begin(), field.end(), shared);
  }
  return field;
}

// Payoff table: entry (i, j) is the spectral efficiency when the receiver
// sits on ray i and the obstacle on ray j. Rows maximize, columns minimize.
inline Matrix build_payoff_matrix(const Scenario& sc, const FadingField& field) {
  sc.validate();
  if (field.size() != static_cast<std::size_t>(kNumActions) * kNumActions)
    throw std::domain_error("payoff: fading field must match the action grid");
  const ActionGrid grid = action_grid();
  Matrix out(kNumActions, kNumActions);
  for (int i = 0; i < kNumActions; ++i) {
    const PolarPosition pos_r{sc.rho_r_m, grid.angles_deg[i]};
    for (int j = 0; j < kNumActions; ++j) {
      const PolarPosition pos_a{sc.rho_a_m, grid.angles_deg[j]};
      const ChannelSample s = channel_sample(
          sc, pos_r, pos_a, field[static_cast<std::size_t>(i) * kNumActions + j]);
      out(i, j) = spectral_efficiency(sc, s);
    }
  }
  return out;
}

struct MixedStrategy {
  std::vector<double> probs;
};

struct Equilibrium {
  double value = 0.0;
  MixedStrategy x_r;  // row player, maximizer
  MixedStrategy x_a;  // column player, minimizer
};

inline constexpr double kSupportEpsilon = 1e-6;

// Indices played with probability above epsilon.
inline std::vector<std::size_t> support(const MixedStrategy& s,
                                        double epsilon = kSupportEpsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::domain_error("support: epsilon must lie in (0, 1)");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < s.probs.size(); ++i)
    if (s.probs[i] > epsilon) idx.push_back(i);
  return idx;
}

namespace detail {

inline constexpr double kPivotTol = 1e-9;
inline constexpr double kRatioTieTol = 1e-9;

inline std::string matrix_condition_report(const Matrix& M) {
  std::ostringstream os;
  os << M.rows() << "x" << M.cols() << " matrix, entries in [" << M.min()
     << ", " << M.max() << "], spread " << (M.max() - M.min());
  return os.str();
}

// Clamp round-off negatives and renormalize to a unit simplex point.
inline void normalize_simplex(std::vector<double>& p) {
  double sum = 0.0;
  for (double& v : p) {
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (sum <= 0.0) {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(p.size()));
    return;
  }
  for (double& v : p) v /= sum;
}

}  // namespace detail

// Exact mixed equilibrium of the zero-sum game with payoff matrix M (row
// player maximizes). The game is shifted so all entries are >= 1 and the
// equivalent packing LP
//   max sum(z)  s.t.  M' z <= 1, z >= 0
// is solved by primal simplex from the all-slack basis with Bland's rule.
// The column strategy is z renormalized; the row strategy comes from the
// slack reduced costs (the dual solution); the value is 1/sum(z) unshifted.
inline Equilibrium solve_zero_sum_lp(const Matrix& M) {
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!std::isfinite(M(i, j)))
        throw SolverError("solver: non-finite matrix entry at (" +
                          std::to_string(i) + ", " + std::to_string(j) + ")");

  const double shift = 1.0 - M.min();
  const std::size_t width = n + m + 1;  // structural, slack, rhs
  std::vector<std::vector<double>> tab(m, std::vector<double>(width, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = M(i, j) + shift;
    tab[i][n + i] = 1.0;
    tab[i][width - 1] = 1.0;
  }
  std::vector<double> reduced(n + m, 0.0);
  for (std::size_t j = 0; j < n; ++j) reduced[j] = 1.0;
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  double objective = 0.0;
  const std::size_t npos = std::numeric_limits<std::size_t>::max();
  const std::size_t pivot_cap = 2000 + 200 * (m + n);
  for (std::size_t pivots = 0;; ++pivots) {
    if (pivots > pivot_cap)
      throw SolverError("solver: pivot cap exceeded, " +
                        detail::matrix_condition_report(M));

    // Bland entering rule: lowest index with positive reduced cost.
    std::size_t enter = npos;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (reduced[j] > detail::kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter == npos) break;  // optimal

    // Ratio test; ties resolved toward the lowest basis variable index.
    std::size_t leave = npos;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= detail::kPivotTol) continue;
      const double ratio = tab[i][width - 1] / tab[i][enter];
      if (ratio < best_ratio - detail::kRatioTieTol) {
        best_ratio = ratio;
        leave = i;
      } else if (ratio < best_ratio + detail::kRatioTieTol && leave != npos &&
                 basis[i] < basis[leave]) {
        if (ratio < best_ratio) best_ratio = ratio;
        leave = i;
      }
    }
    if (leave == npos)
      throw SolverError("solver: unbounded direction, " +
                        detail::matrix_condition_report(M));

    const double pivot = tab[leave][enter];
    for (std::size_t c = 0; c < width; ++c) tab[leave][c] /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave) continue;
      const double f = tab[r][enter];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < width; ++c) tab[r][c] -= f * tab[leave][c];
    }
    const double fz = reduced[enter];
    for (std::size_t c = 0; c < n + m; ++c) reduced[c] -= fz * tab[leave][c];
    objective += fz * tab[leave][width - 1];
    basis[leave] = enter;
  }

  if (!(objective > 0.0))
    throw SolverError("solver: degenerate objective, " +
                      detail::matrix_condition_report(M));

  Equilibrium eq;
  eq.x_a.probs.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) eq.x_a.probs[basis[i]] = tab[i][width - 1];
  eq.x_r.probs.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) eq.x_r.probs[i] = -reduced[n + i];
  detail::normalize_simplex(eq.x_a.probs);
  detail::normalize_simplex(eq.x_r.probs);
  eq.value = 1.0 / objective - shift;
  return eq;
}

// Brown-Robinson iteration, alternating best responses with lowest-index
// tie-breaks. Returns a value bracket and the empirical play frequencies;
// for zero-sum games the bracket midpoint converges to the LP value.
struct FictitiousPlayResult {
  double value = 0.0;        // bracket midpoint
  double lower_bound = 0.0;  // column player's guarantee so far
  double upper_bound = 0.0;  // row player's guarantee so far
  MixedStrategy x_r;
  MixedStrategy x_a;
  std::uint64_t iterations = 0;
};

inline FictitiousPlayResult fictitious_play(const Matrix& M,
                                            std::uint64_t iterations) {
  if (iterations < 1)
    throw std::domain_error("fictitious_play: iterations must be >= 1");
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  std::vector<double> cum_r(m, 0.0);  // row payoffs against column history
  std::vector<double> cum_c(n, 0.0);  // column payoffs against row history
  std::vector<std::uint64_t> plays_r(m, 0);
  std::vector<std::uint64_t> plays_c(n, 0);

  for (std::uint64_t t = 0; t < iterations; ++t) {
    std::size_t i = 0;
    for (std::size_t r = 1; r < m; ++r)
      if (cum_r[r] > cum_r[i]) i = r;
    ++plays_r[i];
    for (std::size_t c = 0; c < n; ++c) cum_c[c] += M(i, c);

    std::size_t j = 0;
    for (std::size_t c = 1; c < n; ++c)
      if (cum_c[c] < cum_c[j]) j = c;
    ++plays_c[j];
    for (std::size_t r = 0; r < m; ++r) cum_r[r] += M(r, j);
  }

  FictitiousPlayResult out;
  out.iterations = iterations;
  const double inv = 1.0 / static_cast<double>(iterations);
  out.upper_bound = *std::max_element(cum_r.begin(), cum_r.end()) * inv;
  out.lower_bound = *std::min_element(cum_c.begin(), cum_c.end()) * inv;
  out.value = 0.5 * (out.upper_bound + out.lower_bound);
  out.x_r.probs.resize(m);
  out.x_a.probs.resize(n);
  for (std::size_t r = 0; r < m; ++r)
    out.x_r.probs[r] = static_cast<double>(plays_r[r]) * inv;
  for (std::size_t c = 0; c < n; ++c)
    out.x_a.probs[c] = static_cast<double>(plays_c[c]) * inv;
  return out;
}

// Deviation diagnostics for a proposed equilibrium of M.
struct EquilibriumResiduals {
  double best_row_response = 0.0;   // max_i (M x_a)_i
  double worst_col_response = 0.0;  // min_j (x_r^T M)_j
  double minimax_gap = 0.0;         // best_row_response - worst_col_response
  double row_indifference = 0.0;    // max |(M x_a)_i - v| over support rows
  double col_indifference = 0.0;    // max |(x_r^T M)_j - v| over support cols
};

inline EquilibriumResiduals equilibrium_residuals(const Matrix& M,
                                                  const Equilibrium& eq) {
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  std::vector<double> row_payoff(m, 0.0);  // vs x_a
  std::vector<double> col_payoff(n, 0.0);  // vs x_r
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      row_payoff[i] += M(i, j) * eq.x_a.probs[j];
      col_payoff[j] += M(i, j) * eq.x_r.probs[i];
    }
  EquilibriumResiduals res;
  res.best_row_response = *std::max_element(row_payoff.begin(), row_payoff.end());
  res.worst_col_response = *std::min_element(col_payoff.begin(), col_payoff.end());
  res.minimax_gap = res.best_row_response - res.worst_col_response;
  for (std::size_t i : support(eq.x_r))
    res.row_indifference =
        std::max(res.row_indifference, std::abs(row_payoff[i] - eq.value));
  for (std::size_t j : support(eq.x_a))
    res.col_indifference =
        std::max(res.col_indifference, std::abs(col_payoff[j] - eq.value));
  return res;
}

}  // namespace blockpeek
