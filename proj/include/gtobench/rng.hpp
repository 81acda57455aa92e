// Copyright 2026 The gtobench Authors
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

#ifndef GTOBENCH_RNG_HPP
#define GTOBENCH_RNG_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "gtobench/types.hpp"

namespace gtobench {

// Identifier written into every report. Streams are xoshiro256** states
// seeded through splitmix64; all distributions below are implemented here so
// draws do not depend on the standard library vendor.
inline constexpr std::string_view kRngAlgorithm = "xoshiro256starstar-splitmix64";

std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t fnv1a64(std::string_view bytes,
                      std::uint64_t basis = 0xcbf29ce484222325ULL);

class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream for (seed, label). Distinct labels or run indices
  // give unrelated states.
  static Rng stream(const SeedSpec& seed, std::string_view label);
  // Child stream; does not advance this generator.
  Rng derive(std::string_view label) const;
  Rng derive(std::uint64_t index) const;

  std::uint64_t next_u64();
  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  // Uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_int(std::uint64_t n);
  double normal();
  // Gamma(shape, 1) by Marsaglia-Tsang; shapes below one use the
  // U^(1/shape) boost.
  double gamma(double shape);
  // Beta(a, b) as G1 / (G1 + G2).
  double beta(double a, double b);
  // Index drawn with probability weights[i] / sum(weights).
  std::size_t categorical(std::span<const double> weights);

  std::array<std::uint64_t, 4> state() const { return s_; }

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace gtobench

#endif  // GTOBENCH_RNG_HPP
