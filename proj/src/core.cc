// Copyright 2026 The Eloplus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eloplus/core.h"

#include <algorithm>
#include <limits>
#include <string>

#include "eloplus/error.h"

namespace eloplus {

bool IsValidOutcome(double outcome) {
  return outcome == 0.0 || outcome == 0.5 || outcome == 1.0;
}

void ValidateGame(const GameRecord& game, bool require_outcome) {
  if (game.white == game.black) {
    throw ValidationError("player " + std::to_string(game.white.value) +
                          " cannot play against themselves");
  }
  if (game.month < 1) {
    throw ValidationError("month must be >= 1, got " +
                          std::to_string(game.month));
  }
  if (game.outcome.has_value() && !IsValidOutcome(*game.outcome)) {
    throw ValidationError("outcome must be one of 0, 0.5, 1");
  }
  if (require_outcome && !game.outcome.has_value()) {
    throw ValidationError("game is missing its outcome");
  }
}

DatasetIndex DatasetIndex::Build(const Dataset& dataset) {
  if (dataset.empty()) throw InvalidArgumentError("dataset is empty");
  DatasetIndex index;
  index.t_min_ = std::numeric_limits<int>::max();
  index.t_max_ = std::numeric_limits<int>::min();
  std::map<PlayerId, std::size_t> counts;
  for (const GameRecord& game : dataset.games) {
    ++counts[game.white];
    ++counts[game.black];
    index.t_min_ = std::min(index.t_min_, game.month);
    index.t_max_ = std::max(index.t_max_, game.month);
  }
  index.players_.reserve(counts.size());
  index.games_per_player_.reserve(counts.size());
  for (const auto& [id, count] : counts) {
    index.dense_.emplace(id, index.players_.size());
    index.players_.push_back(id);
    index.games_per_player_.push_back(count);
  }
  return index;
}

std::optional<std::size_t> DatasetIndex::find(PlayerId id) const {
  auto it = dense_.find(id);
  if (it == dense_.end()) return std::nullopt;
  return it->second;
}

std::size_t DatasetIndex::at(PlayerId id) const {
  auto it = dense_.find(id);
  if (it == dense_.end()) {
    throw ConsistencyError("player " + std::to_string(id.value) +
                           " is not in the dataset");
  }
  return it->second;
}

double PredictOutcome(double r_white, double r_black, double gamma) {
  if (!std::isfinite(r_white) || !std::isfinite(r_black) ||
      !std::isfinite(gamma)) {
    throw InvalidArgumentError("PredictOutcome: inputs must be finite");
  }
  return PredictOutcomeUnchecked(r_white, r_black, gamma);
}

double TimeWeight(int t, int t_min, int t_max) {
  if (t_min > t || t > t_max) {
    throw RangeError("month " + std::to_string(t) + " outside [" +
                     std::to_string(t_min) + ", " + std::to_string(t_max) +
                     "]");
  }
  const double ratio = static_cast<double>(1 + t - t_min) /
                       static_cast<double>(1 + t_max - t_min);
  return ratio * ratio;
}

std::vector<double> ComputeTimeWeights(const Dataset& dataset, int t_min,
                                       int t_max) {
  std::vector<double> weights;
  weights.reserve(dataset.size());
  for (const GameRecord& game : dataset.games) {
    weights.push_back(TimeWeight(game.month, t_min, t_max));
  }
  return weights;
}

std::vector<double> ComputeTimeWeights(const Dataset& dataset,
                                       const DatasetIndex& index) {
  return ComputeTimeWeights(dataset, index.t_min(), index.t_max());
}

Neighborhoods BuildNeighborhoods(const Dataset& dataset,
                                 const DatasetIndex& index,
                                 std::span<const double> weights) {
  if (weights.size() != dataset.size()) {
    throw InvalidArgumentError("one time weight per game is required");
  }
  std::vector<std::vector<Neighbor>> lists(index.player_count());
  for (std::size_t g = 0; g < dataset.size(); ++g) {
    const GameRecord& game = dataset.games[g];
    const std::size_t white = index.at(game.white);
    const std::size_t black = index.at(game.black);
    lists[white].push_back({black, weights[g]});
    lists[black].push_back({white, weights[g]});
  }
  return Neighborhoods(std::move(lists));
}

std::vector<double> NeighborAverages(const Neighborhoods& neighborhoods,
                                     std::span<const double> ratings) {
  if (ratings.size() != neighborhoods.player_count()) {
    throw InvalidArgumentError("one rating per player is required");
  }
  std::vector<double> averages(neighborhoods.player_count(), 0.0);
  for (std::size_t i = 0; i < averages.size(); ++i) {
    double weighted = 0.0;
    double total = 0.0;
    for (const Neighbor& n : neighborhoods.of(i)) {
      weighted += n.weight * ratings[n.opponent];
      total += n.weight;
    }
    if (total > 0.0) averages[i] = weighted / total;
  }
  return averages;
}

}  // namespace eloplus
