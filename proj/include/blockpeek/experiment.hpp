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

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "blockpeek/fading.hpp"
#include "blockpeek/game.hpp"
#include "blockpeek/scenario.hpp"

namespace blockpeek {

// Monte-Carlo campaign description: obstacle ring radii to sweep, fading
// realizations per radius, and the scenario template they specialize.
struct SweepConfig {
  std::vector<double> distances_m = {1.00, 1.25, 1.50, 1.75, 2.00, 2.25, 2.50};
  int realizations = 50;
  std::uint64_t master_seed = 1;
  Scenario scenario;

  void validate() const {
    scenario.validate();
    if (distances_m.empty())
      throw std::domain_error("sweep: distance list must not be empty");
    double prev = 0.0;
    for (double d : distances_m) {
      if (!(d > prev))
        throw std::domain_error("sweep: distances must be positive and strictly increasing");
      if (!(d < scenario.rho_r_m))
        throw std::domain_error("sweep: every distance must be smaller than rho_r");
      prev = d;
    }
    if (realizations < 1)
      throw std::domain_error("sweep: realizations must be >= 1");
  }
};

// Per-distance statistics over the fading realizations.
struct DistanceAggregate {
  double rho_a_m = 0.0;
  int realizations = 0;
  std::array<double, kNumActions> mean_strategy_r{};
  std::array<double, kNumActions> mean_strategy_a{};
  std::array<double, kNumActions> std_strategy_r{};
  std::array<double, kNumActions> std_strategy_a{};
  double mean_angle_r_deg = 0.0;
  double mean_angle_a_deg = 0.0;
  double mean_value = 0.0;
  double std_value = 0.0;
};

// One fading draw, one matrix, one solve.
inline Equilibrium run_realization(const Scenario& sc, std::uint64_t seed) {
  Rng rng(seed);
  const FadingField field = fading_field(sc, rng);
  return solve_zero_sum_lp(build_payoff_matrix(sc, field));
}

// Probability-weighted mean pointing angle of a strategy on the grid.
inline double weighted_mean_angle(const MixedStrategy& s, const ActionGrid& grid) {
  if (s.probs.size() != static_cast<std::size_t>(kNumActions))
    throw std::domain_error("mean_angle: strategy size must match the grid");
  double acc = 0.0;
  for (int k = 0; k < kNumActions; ++k) acc += s.probs[k] * grid.angles_deg[k];
  return acc;
}

namespace detail {

// Population convention: divide by N, not N-1.
inline double population_std(const std::vector<double>& xs, double mean) {
  double acc = 0.0;
  for (double x : xs) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / static_cast<double>(xs.size()));
}

}  // namespace detail

inline DistanceAggregate aggregate(const std::vector<Equilibrium>& eqs,
                                   const ActionGrid& grid) {
  if (eqs.empty()) throw std::domain_error("aggregate: equilibrium list is empty");
  const double inv_n = 1.0 / static_cast<double>(eqs.size());
  DistanceAggregate out;
  out.realizations = static_cast<int>(eqs.size());

  std::vector<double> values;
  values.reserve(eqs.size());
  for (const Equilibrium& eq : eqs) {
    if (eq.x_r.probs.size() != static_cast<std::size_t>(kNumActions) ||
        eq.x_a.probs.size() != static_cast<std::size_t>(kNumActions))
      throw std::domain_error("aggregate: equilibrium does not match the grid");
    values.push_back(eq.value);
    out.mean_angle_r_deg += weighted_mean_angle(eq.x_r, grid) * inv_n;
    out.mean_angle_a_deg += weighted_mean_angle(eq.x_a, grid) * inv_n;
    for (int k = 0; k < kNumActions; ++k) {
      out.mean_strategy_r[k] += eq.x_r.probs[k] * inv_n;
      out.mean_strategy_a[k] += eq.x_a.probs[k] * inv_n;
    }
  }
  for (double v : values) out.mean_value += v * inv_n;
  out.std_value = detail::population_std(values, out.mean_value);

  for (int k = 0; k < kNumActions; ++k) {
    double acc_r = 0.0;
    double acc_a = 0.0;
    for (const Equilibrium& eq : eqs) {
      const double dr = eq.x_r.probs[k] - out.mean_strategy_r[k];
      const double da = eq.x_a.probs[k] - out.mean_strategy_a[k];
      acc_r += dr * dr;
      acc_a += da * da;
    }
    out.std_strategy_r[k] = std::sqrt(acc_r * inv_n);
    out.std_strategy_a[k] = std::sqrt(acc_a * inv_n);
  }
  return out;
}

// Raw per-realization record, kept when the caller asks for dumps.
struct RealizationRecord {
  double rho_a_m = 0.0;
  int distance_index = 0;
  int realization_index = 0;
  std::uint64_t seed = 0;
  Equilibrium eq;
};

struct SweepResult {
  std::vector<DistanceAggregate> aggregates;      // one per distance
  std::vector<RealizationRecord> realizations;    // (distance, realization) order
};

// Full campaign. Work units are independent (distance, realization) pairs;
// results land in preallocated slots so the output never depends on thread
// scheduling. threads <= 1 runs inline.
inline SweepResult sweep_detailed(const SweepConfig& cfg, unsigned threads = 1,
                                  bool keep_realizations = false) {
  cfg.validate();
  const std::size_t nd = cfg.distances_m.size();
  const std::size_t nr = static_cast<std::size_t>(cfg.realizations);
  const std::size_t total = nd * nr;

  std::vector<Equilibrium> eqs(total);
  auto run_unit = [&](std::size_t unit) {
    const std::size_t d = unit / nr;
    const std::size_t r = unit % nr;
    Scenario sc = cfg.scenario;
    sc.rho_a_m = cfg.distances_m[d];
    const std::uint64_t seed = detail::child_seed(cfg.master_seed, d, r);
    eqs[unit] = run_realization(sc, seed);
  };

  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(threads > 0 ? threads : 1, total));
  if (workers <= 1) {
    for (std::size_t u = 0; u < total; ++u) run_unit(u);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        const std::size_t u = next.fetch_add(1);
        if (u >= total) return;
        try {
          run_unit(u);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  const ActionGrid grid = action_grid();
  SweepResult out;
  out.aggregates.reserve(nd);
  if (keep_realizations) out.realizations.reserve(total);
  for (std::size_t d = 0; d < nd; ++d) {
    const std::vector<Equilibrium> slice(eqs.begin() + static_cast<std::ptrdiff_t>(d * nr),
                                         eqs.begin() + static_cast<std::ptrdiff_t>((d + 1) * nr));
    DistanceAggregate agg = aggregate(slice, grid);
    agg.rho_a_m = cfg.distances_m[d];
    out.aggregates.push_back(agg);
    if (keep_realizations) {
      for (std::size_t r = 0; r < nr; ++r) {
        RealizationRecord rec;
        rec.rho_a_m = cfg.distances_m[d];
        rec.distance_index = static_cast<int>(d);
        rec.realization_index = static_cast<int>(r);
        rec.seed = detail::child_seed(cfg.master_seed, d, r);
        rec.eq = eqs[d * nr + r];
        out.realizations.push_back(std::move(rec));
      }
    }
  }
  return out;
}

inline std::vector<DistanceAggregate> sweep(const SweepConfig& cfg,
                                            unsigned threads = 1) {
  return sweep_detailed(cfg, threads).aggregates;
}

}  // namespace blockpeek
