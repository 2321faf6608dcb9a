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

#ifndef ELOPLUS_CORE_H_
#define ELOPLUS_CORE_H_

#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace eloplus {

struct PlayerId {
  std::uint64_t value = 0;

  friend auto operator<=>(const PlayerId&, const PlayerId&) = default;
};

// One game. `outcome` is white's score: 1 white win, 0.5 draw, 0 black win.
// Hold-out games carry no outcome.
struct GameRecord {
  PlayerId white;
  PlayerId black;
  int month = 1;
  std::optional<double> outcome;

  friend bool operator==(const GameRecord&, const GameRecord&) = default;
};

struct Dataset {
  std::vector<GameRecord> games;

  bool empty() const { return games.empty(); }
  std::size_t size() const { return games.size(); }

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Ratings on the natural-log logistic scale, ordered by player id.
using RatingTable = std::map<PlayerId, double>;

// True for exactly 0, 0.5 and 1.
bool IsValidOutcome(double outcome);

// Throws ValidationError if `game` has white == black, month < 1, or an
// outcome outside {0, 0.5, 1}; also if `require_outcome` and none is set.
void ValidateGame(const GameRecord& game, bool require_outcome);

// Player domain and month range of a dataset. Players are assigned dense
// indices in increasing id order; every per-player array in the library is
// laid out by these indices.
class DatasetIndex {
 public:
  // Throws InvalidArgumentError on an empty dataset.
  static DatasetIndex Build(const Dataset& dataset);

  const std::vector<PlayerId>& players() const { return players_; }
  std::size_t player_count() const { return players_.size(); }
  int t_min() const { return t_min_; }
  int t_max() const { return t_max_; }

  // Number of games each player appears in, by dense index.
  const std::vector<std::size_t>& games_per_player() const {
    return games_per_player_;
  }
  std::size_t games_of(PlayerId id) const { return games_per_player_[at(id)]; }

  std::optional<std::size_t> find(PlayerId id) const;
  // Throws ConsistencyError for an unknown id.
  std::size_t at(PlayerId id) const;

 private:
  std::vector<PlayerId> players_;
  std::vector<std::size_t> games_per_player_;
  std::map<PlayerId, std::size_t> dense_;
  int t_min_ = 0;
  int t_max_ = 0;
};

// Expected score of the white player:
//   1 / (1 + exp(r_black - r_white - gamma)).
// Throws InvalidArgumentError on non-finite input.
double PredictOutcome(double r_white, double r_black, double gamma);

// Unchecked variant for inner loops.
inline double PredictOutcomeUnchecked(double r_white, double r_black,
                                      double gamma) {
  return 1.0 / (1.0 + std::exp(r_black - r_white - gamma));
}

// Recency weight ((1 + t - t_min) / (1 + t_max - t_min))^2. Throws
// RangeError unless t_min <= t <= t_max.
double TimeWeight(int t, int t_min, int t_max);

// One weight per game, in game order, against the given month range.
std::vector<double> ComputeTimeWeights(const Dataset& dataset, int t_min,
                                       int t_max);
std::vector<double> ComputeTimeWeights(const Dataset& dataset,
                                       const DatasetIndex& index);

struct Neighbor {
  std::size_t opponent = 0;  // dense index
  double weight = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// The opponent multiset of every player, colors ignored, with each entry
// weighted by the game's time weight. Repeated pairings stay as separate
// entries, so size(i) is the number of games player i took part in.
class Neighborhoods {
 public:
  Neighborhoods() = default;
  explicit Neighborhoods(std::vector<std::vector<Neighbor>> lists)
      : lists_(std::move(lists)) {}

  std::size_t player_count() const { return lists_.size(); }
  std::span<const Neighbor> of(std::size_t player) const {
    return lists_[player];
  }
  std::size_t size(std::size_t player) const { return lists_[player].size(); }

 private:
  std::vector<std::vector<Neighbor>> lists_;
};

// Every game must reference players in `index`; `weights` is parallel to
// `dataset.games`.
Neighborhoods BuildNeighborhoods(const Dataset& dataset,
                                 const DatasetIndex& index,
                                 std::span<const double> weights);

// Weighted mean opponent rating per player. A player with no neighbors
// gets 0.
std::vector<double> NeighborAverages(const Neighborhoods& neighborhoods,
                                     std::span<const double> ratings);

}  // namespace eloplus

template <>
struct std::hash<eloplus::PlayerId> {
  std::size_t operator()(const eloplus::PlayerId& id) const noexcept {
    return std::hash<std::uint64_t>{}(id.value);
  }
};

#endif  // ELOPLUS_CORE_H_
