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

#ifndef GTOBENCH_TYPES_HPP
#define GTOBENCH_TYPES_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gtobench {

// Every failure raised by the library carries one of these codes. The C API
// maps them onto gtob_status values.
enum class ErrorCode {
  kNotNormalized,
  kNegativeProbability,
  kDegenerateCounts,
  kHeadsUpMode,
  kMultiwayState,
  kHeadsUpState,
  kConfigError,
  kEmptyEvalSet,
  kTooFewRuns,
  kReferenceMissing,
  kIoError,
  kEmptyReport,
  kUsageError,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Street : std::uint8_t { kPre = 0, kFlop, kTurn, kRiver };
inline constexpr std::size_t kNumStreets = 4;
inline constexpr std::array<Street, kNumStreets> kAllStreets = {
    Street::kPre, Street::kFlop, Street::kTurn, Street::kRiver};

enum class Texture : std::uint8_t {
  kDry = 0,
  kPaired,
  kTwoTone,
  kMonotone,
  kStraighty,
  kPairedTwoTone,
};
inline constexpr std::size_t kNumTextures = 6;
inline constexpr std::array<Texture, kNumTextures> kAllTextures = {
    Texture::kDry,      Texture::kPaired,    Texture::kTwoTone,
    Texture::kMonotone, Texture::kStraighty, Texture::kPairedTwoTone};

// Hero actions in canonical order. Serialization and argmax ties follow it.
enum class Action : std::uint8_t { kCall = 0, kRaise, kFold };
inline constexpr std::size_t kNumActions = 3;

std::string_view to_string(Street s);
std::string_view to_string(Texture t);
std::string_view to_string(Action a);
Street parse_street(std::string_view text);
Texture parse_texture(std::string_view text);

inline constexpr int kMinPlayers = 2;
inline constexpr int kMaxPlayers = 6;

// How DecisionState::equity should be read at a multiway table. Pairwise
// equities get the e^(k-1) transform; showdown equities are already the
// probability of beating the whole field.
enum class EquityKind : std::uint8_t { kPairwise = 0, kShowdown };

struct DecisionState {
  Street street = Street::kPre;
  double equity = 0.5;
  Texture texture = Texture::kDry;
  int players = 2;
  EquityKind equity_kind = EquityKind::kPairwise;

  bool headsup() const { return players == 2; }
  friend bool operator==(const DecisionState&, const DecisionState&) = default;
};

// Throws kInvalidArgument on out-of-range equity or player count.
void validate_state(const DecisionState& x);

inline constexpr double kNormalizationTolerance = 1e-9;

// Probability triple over [call, raise, fold]. Instances can only be built
// through the checked factories, so every live value is a valid distribution.
class ActionDistribution {
 public:
  ActionDistribution() : probs_{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0} {}

  static ActionDistribution uniform() { return ActionDistribution(); }
  // Checks the probabilities as given; see validate_distribution.
  static ActionDistribution from_probabilities(double call, double raise,
                                               double fold);
  static ActionDistribution from_probabilities(
      const std::array<double, kNumActions>& p);
  // Normalizes non-negative weights. All-zero weights yield uniform.
  static ActionDistribution from_weights(
      const std::array<double, kNumActions>& w);
  static ActionDistribution point_mass(Action a);

  double call() const { return probs_[0]; }
  double raise() const { return probs_[1]; }
  double fold() const { return probs_[2]; }
  double operator[](Action a) const {
    return probs_[static_cast<std::size_t>(a)];
  }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::array<double, kNumActions>& probs() const { return probs_; }

  // First maximal component in canonical order.
  Action argmax() const;

  friend bool operator==(const ActionDistribution&,
                         const ActionDistribution&) = default;

 private:
  explicit ActionDistribution(const std::array<double, kNumActions>& p)
      : probs_(p) {}
  std::array<double, kNumActions> probs_;
};

// Returns the probabilities unchanged when they sum to one within 1e-9 and
// are non-negative; throws kNegativeProbability / kNotNormalized otherwise.
std::array<double, kNumActions> validate_distribution(
    const std::array<double, kNumActions>& p);
inline const ActionDistribution& validate_distribution(
    const ActionDistribution& d) {
  validate_distribution(d.probs());
  return d;
}

// (master_seed, run_index) names one independent RNG family; see rng.hpp.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t run_index = 0;
  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

}  // namespace gtobench

#endif  // GTOBENCH_TYPES_HPP
