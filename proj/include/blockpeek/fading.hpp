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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "blockpeek/polar.hpp"
#include "blockpeek/scenario.hpp"

namespace blockpeek::detail {

// SplitMix64 step, used to derive decorrelated child seeds from a master
// seed without coupling nearby streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t a,
                                std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(master) + a) + b);
}

}  // namespace blockpeek::detail

namespace blockpeek {

// Deterministic uniform/complex-Gaussian source. Only the raw mt19937_64
// output is consumed; the uniform and Gaussian mappings are done by hand
// because the standard distributions are implementation-defined and would
// break bit-reproducibility across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform on (0, 1]: 53 random mantissa bits, zero excluded so the draw
  // is always safe under log().
  double uniform_pos() {
    const std::uint64_t bits = eng_() >> 11;
    return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
  }

  // Uniform on [0, 1).
  double uniform() {
    const std::uint64_t bits = eng_() >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
  }

  // Circularly-symmetric complex Gaussian with E[|z|^2] = mean_power,
  // via the polar Box-Muller transform.
  std::complex<double> complex_gaussian(double mean_power) {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-mean_power * std::log(u1));
    return std::polar(r, 2.0 * kPi * u2);
  }

 private:
  std::mt19937_64 eng_;
};

// One diffuse (Rayleigh) fading draw. Returns exactly zero when the mean
// power is the disabled sentinel so clean-channel runs stay deterministic.
inline std::complex<double> draw_fading(Rng& rng, double mean_power) {
  if (mean_power <= 0.0) return {0.0, 0.0};
  return rng.complex_gaussian(mean_power);
}

inline std::complex<double> draw_fading(Rng& rng, const Scenario& sc) {
  return draw_fading(rng, sc.fading_mean_power());
}

}  // namespace blockpeek
