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

// Library walkthrough: solve a couple of classic zero-sum games with the
// exact LP solver and cross-check with the fictitious-play oracle.

#include <cstdio>

#include "blockpeek/game.hpp"

namespace {

void report(const char* name, const blockpeek::Matrix& M) {
  const blockpeek::Equilibrium eq = blockpeek::solve_zero_sum_lp(M);
  const blockpeek::EquilibriumResiduals res = blockpeek::equilibrium_residuals(M, eq);
  const blockpeek::FictitiousPlayResult fp = blockpeek::fictitious_play(M, 200000);
  std::printf("%s\n", name);
  std::printf("  value   %.6f (fictitious play estimate %.6f)\n", eq.value, fp.value);
  std::printf("  row     ");
  for (double p : eq.x_r.probs) std::printf("%.4f ", p);
  std::printf("\n  column  ");
  for (double p : eq.x_a.probs) std::printf("%.4f ", p);
  std::printf("\n  minimax gap %.2e\n\n", res.minimax_gap);
}

}  // namespace

int main() {
  blockpeek::Matrix pennies(2, 2);
  pennies(0, 0) = 1.0;
  pennies(0, 1) = -1.0;
  pennies(1, 0) = -1.0;
  pennies(1, 1) = 1.0;
  report("matching pennies", pennies);

  blockpeek::Matrix rps(3, 3);
  const double cyclic[3][3] = {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rps(i, j) = cyclic[i][j];
  report("rock-paper-scissors", rps);

  blockpeek::Matrix mixed(2, 2);
  mixed(0, 0) = 4.0;
  mixed(0, 1) = 1.0;
  mixed(1, 0) = 2.0;
  mixed(1, 1) = 3.0;
  report("2x2 with mixed equilibrium", mixed);
  return 0;
}
