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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "gtobench/rng.hpp"

namespace gtobench {
namespace {

// Upper 0.001 quantiles of the chi-squared distribution.
constexpr double kChi2Df3 = 16.266;
constexpr double kChi2Df5 = 20.515;

TEST_CASE("splitmix64 and xoshiro256** match published outputs") {
  std::uint64_t s = 0;
  CHECK(splitmix64(s) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(s) == 0x6e789e6aa1b965f4ULL);
  Rng rng(0);
  CHECK(rng.next_u64() == 0x99ec5f36cb75f2b4ULL);
  CHECK(rng.next_u64() == 0xbf6e1f784956452aULL);
  CHECK(rng.next_u64() == 0x1a5f849d4933e6e0ULL);
}

TEST_CASE("fnv1a64") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("gtobench") == 0x002a45a25dd4f79fULL);
}

TEST_CASE("streams are deterministic and label separated") {
  const SeedSpec seed{7, 3};
  Rng a = Rng::stream(seed, "train");
  Rng b = Rng::stream(seed, "train");
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(Rng::stream(seed, "train").state() != Rng::stream(seed, "eval").state());
  CHECK(Rng::stream(seed, "train").state() !=
        Rng::stream(SeedSpec{7, 4}, "train").state());
  Rng parent = Rng::stream(seed, "x");
  const auto before = parent.state();
  CHECK(parent.derive(1).state() != parent.derive(2).state());
  CHECK(parent.state() == before);
}

TEST_CASE("uniform and uniform_int") {
  Rng rng(11);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / 100000 - 0.5) < 3 * std::sqrt(1.0 / 12 / 100000));

  std::vector<int> counts(6);
  const int n = 60000;
  for (int i = 0; i < n; ++i) ++counts[rng.uniform_int(6)];
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - n / 6.0) * (c - n / 6.0) / (n / 6.0);
  CHECK(chi2 < kChi2Df5);
}

TEST_CASE("normal moments") {
  Rng rng(12);
  double s1 = 0, s2 = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    s1 += z;
    s2 += z * z;
  }
  CHECK(std::abs(s1 / n) < 3 / std::sqrt(n));
  CHECK(std::abs(s2 / n - 1.0) < 3 * std::sqrt(2.0 / n));
}

TEST_CASE("gamma mean and variance equal the shape") {
  for (double shape : {0.5, 1.0, 3.0, 8.0}) {
    Rng rng(13);
    double s1 = 0, s2 = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      const double g = rng.gamma(shape);
      REQUIRE(g > 0.0);
      s1 += g;
      s2 += g * g;
    }
    const double m = s1 / n;
    const double v = s2 / n - m * m;
    CHECK(std::abs(m - shape) < 4 * std::sqrt(shape / n));
    CHECK(std::abs(v / shape - 1.0) < 0.05);
  }
}

TEST_CASE("categorical frequencies") {
  Rng rng(14);
  const std::vector<double> w = {0.1, 0.2, 0.3, 0.4};
  std::vector<int> counts(4);
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++counts[rng.categorical(w)];
  double chi2 = 0.0;
  for (int i = 0; i < 4; ++i) {
    chi2 += (counts[i] - n * w[i]) * (counts[i] - n * w[i]) / (n * w[i]);
  }
  CHECK(chi2 < kChi2Df3);
  const std::vector<double> point = {0.0, 0.0, 1.0};
  for (int i = 0; i < 100; ++i) CHECK(rng.categorical(point) == 2);
}

}  // namespace
}  // namespace gtobench
