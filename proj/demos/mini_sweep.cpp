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

// Library walkthrough: a reduced distance sweep showing how the obstacle
// and receiver spread their equilibrium positions as the obstacle moves
// outward from the transmitter.

#include <cstdio>

#include "blockpeek/experiment.hpp"

int main() {
  blockpeek::SweepConfig cfg;
  cfg.distances_m = {1.0, 1.75, 2.5};
  cfg.realizations = 10;
  cfg.master_seed = 42;

  const auto aggregates = blockpeek::sweep(cfg);
  std::printf("rho_a   angle_R  angle_A  value\n");
  for (const blockpeek::DistanceAggregate& a : aggregates) {
    std::printf("%.2f m  %5.2f    %5.2f    %.3f +/- %.3f b/s/Hz\n", a.rho_a_m,
                a.mean_angle_r_deg, a.mean_angle_a_deg, a.mean_value, a.std_value);
  }

  // Mean receiver strategy at the middle distance, as a crude bar chart.
  const blockpeek::ActionGrid grid = blockpeek::action_grid();
  std::printf("\nreceiver strategy at rho_a = %.2f m:\n", aggregates[1].rho_a_m);
  for (int k = 0; k < blockpeek::kNumActions; ++k) {
    std::printf("%5.1f deg ", grid.angles_deg[k]);
    const int bars = static_cast<int>(aggregates[1].mean_strategy_r[k] * 60.0);
    for (int b = 0; b < bars; ++b) std::printf("#");
    std::printf("\n");
  }
  return 0;
}
