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

#include "gtobench/types.hpp"

#include <cmath>
#include <string>

namespace gtobench {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kNegativeProbability: return "NegativeProbability";
    case ErrorCode::kDegenerateCounts: return "DegenerateCounts";
    case ErrorCode::kHeadsUpMode: return "HeadsUpMode";
    case ErrorCode::kMultiwayState: return "MultiwayState";
    case ErrorCode::kHeadsUpState: return "HeadsUpState";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kEmptyEvalSet: return "EmptyEvalSet";
    case ErrorCode::kTooFewRuns: return "TooFewRuns";
    case ErrorCode::kReferenceMissing: return "ReferenceMissing";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kEmptyReport: return "EmptyReport";
    case ErrorCode::kUsageError: return "UsageError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view to_string(Street s) {
  switch (s) {
    case Street::kPre: return "pre";
    case Street::kFlop: return "flop";
    case Street::kTurn: return "turn";
    case Street::kRiver: return "river";
  }
  return "?";
}

std::string_view to_string(Texture t) {
  switch (t) {
    case Texture::kDry: return "dry";
    case Texture::kPaired: return "paired";
    case Texture::kTwoTone: return "two_tone";
    case Texture::kMonotone: return "monotone";
    case Texture::kStraighty: return "straighty";
    case Texture::kPairedTwoTone: return "paired_two_tone";
  }
  return "?";
}

std::string_view to_string(Action a) {
  switch (a) {
    case Action::kCall: return "call";
    case Action::kRaise: return "raise";
    case Action::kFold: return "fold";
  }
  return "?";
}

Street parse_street(std::string_view text) {
  for (Street s : kAllStreets) {
    if (to_string(s) == text) return s;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown street '" + std::string(text) + "'");
}

Texture parse_texture(std::string_view text) {
  // The display label uses '+'; machine output always uses '_'.
  if (text == "paired+two_tone") return Texture::kPairedTwoTone;
  for (Texture t : kAllTextures) {
    if (to_string(t) == text) return t;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown texture '" + std::string(text) + "'");
}

void validate_state(const DecisionState& x) {
  if (!(x.equity >= 0.0 && x.equity <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "equity " + std::to_string(x.equity) + " outside [0,1]");
  }
  if (x.players < kMinPlayers || x.players > kMaxPlayers) {
    throw Error(ErrorCode::kInvalidArgument,
                "player count " + std::to_string(x.players) +
                    " outside {2..6}");
  }
}

std::array<double, kNumActions> validate_distribution(
    const std::array<double, kNumActions>& p) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) {
      throw Error(ErrorCode::kNegativeProbability,
                  "negative or NaN probability " + std::to_string(v));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    throw Error(ErrorCode::kNotNormalized,
                "probabilities sum to " + std::to_string(sum));
  }
  return p;
}

ActionDistribution ActionDistribution::from_probabilities(double call,
                                                          double raise,
                                                          double fold) {
  return from_probabilities({call, raise, fold});
}

ActionDistribution ActionDistribution::from_probabilities(
    const std::array<double, kNumActions>& p) {
  return ActionDistribution(validate_distribution(p));
}

ActionDistribution ActionDistribution::from_weights(
    const std::array<double, kNumActions>& w) {
  double total = 0.0;
  for (double v : w) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::kNegativeProbability,
                  "invalid weight " + std::to_string(v));
    }
    total += v;
  }
  if (total <= 0.0) return uniform();
  std::array<double, kNumActions> p{};
  for (std::size_t a = 0; a < kNumActions; ++a) p[a] = w[a] / total;
  return from_probabilities(p);
}

ActionDistribution ActionDistribution::point_mass(Action a) {
  std::array<double, kNumActions> p{};
  p[static_cast<std::size_t>(a)] = 1.0;
  return ActionDistribution(p);
}

Action ActionDistribution::argmax() const {
  std::size_t best = 0;
  for (std::size_t a = 1; a < kNumActions; ++a) {
    if (probs_[a] > probs_[best]) best = a;
  }
  return static_cast<Action>(best);
}

}  // namespace gtobench
