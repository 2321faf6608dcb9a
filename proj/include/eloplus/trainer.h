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

#ifndef ELOPLUS_TRAINER_H_
#define ELOPLUS_TRAINER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eloplus/core.h"
#include "eloplus/rng.h"

namespace eloplus {

inline constexpr double kDefaultGamma = 0.2;
inline constexpr double kDefaultLambda = 0.77;
inline constexpr int kDefaultIterations = 50;

// Ratings above this magnitude (natural-log scale) abort training.
inline constexpr double kDivergenceBound = 1e3;

struct EarlyOut {
  // Share of games, taken from the latest months, held out for validation.
  double validation_fraction = 0.1;
  // Consecutive validation-loss increases tolerated before stopping.
  int patience = 2;
};

struct Hyperparams {
  double gamma = kDefaultGamma;    // white advantage
  double lambda = kDefaultLambda;  // pull toward the neighbor average
  int iterations = kDefaultIterations;
  std::uint64_t seed = 1;
  std::optional<EarlyOut> early_out;

  // Throws InvalidArgumentError on lambda < 0, iterations < 1, non-finite
  // gamma/lambda, or an out-of-range early-out configuration.
  void Validate() const;
};

// ((1 + 0.1P) / (p + 0.1P))^0.602 for epoch p of P. Throws RangeError
// unless 1 <= p <= P.
double LearningRate(int epoch, int total_epochs);

// A game resolved to dense player indices.
struct IndexedGame {
  std::uint32_t white = 0;
  std::uint32_t black = 0;
  double weight = 0.0;
  double outcome = 0.0;
};

// Everything an epoch needs that stays fixed across epochs: the player
// domain, the games with their time weights, and the neighborhoods.
class TrainingProblem {
 public:
  // `training` supplies the games, their weights and the neighborhoods.
  // `domain` may cover more players than `training` (players seen only in a
  // validation split); those get empty neighborhoods.
  TrainingProblem(const Dataset& training, DatasetIndex domain);
  explicit TrainingProblem(const Dataset& training);

  const DatasetIndex& index() const { return index_; }
  std::size_t player_count() const { return index_.player_count(); }
  std::span<const IndexedGame> games() const { return games_; }
  const Neighborhoods& neighborhoods() const { return neighborhoods_; }

  std::vector<double> NeighborAveragesOf(
      std::span<const double> ratings) const {
    return NeighborAverages(neighborhoods_, ratings);
  }

 private:
  DatasetIndex index_;
  std::vector<IndexedGame> games_;
  Neighborhoods neighborhoods_;
};

// sum_g w_g (o_hat_g - o_g)^2 + lambda * sum_i (r_i - a_i)^2, with
// `averages` supplying a_i.
double TotalLoss(const TrainingProblem& problem,
                 std::span<const double> ratings,
                 std::span<const double> averages, double gamma,
                 double lambda);

// Same loss over a RatingTable. The player domain is the table's key set;
// a_i is derived from the table and the dataset's neighborhoods, so players
// without games contribute lambda * r_i^2. Throws ConsistencyError if a game
// references a player missing from `ratings`.
double TotalLoss(const Dataset& dataset, const RatingTable& ratings,
                 const Hyperparams& hyper);

// Inputs of one stochastic step.
struct TupleState {
  double r_white = 0.0;
  double r_black = 0.0;
  double a_white = 0.0;
  double a_black = 0.0;
  std::size_t n_white = 1;  // neighborhood sizes
  std::size_t n_black = 1;
  double weight = 1.0;
  double outcome = 0.0;
};

// The two rating updates applied for one game, evaluated with a single
// prediction from the pre-step ratings:
//   r_w -= eta * [ w (o_hat - o) o_hat (1 - o_hat) + lambda/|N_w| (r_w - a_w)]
//   r_b -= eta * [-w (o_hat - o) o_hat (1 - o_hat) + lambda/|N_b| (r_b - a_b)]
// The data term is taken as written above, i.e. without the factor 2 of
// d/dr of w (o_hat - o)^2.
inline std::pair<double, double> UpdatedRatings(const TupleState& s,
                                                double gamma, double lambda,
                                                double eta) {
  const double o_hat = PredictOutcomeUnchecked(s.r_white, s.r_black, gamma);
  const double data = s.weight * (o_hat - s.outcome) * o_hat * (1.0 - o_hat);
  const double white =
      s.r_white -
      eta * (data + lambda / static_cast<double>(s.n_white) *
                        (s.r_white - s.a_white));
  const double black =
      s.r_black -
      eta * (-data + lambda / static_cast<double>(s.n_black) *
                         (s.r_black - s.a_black));
  return {white, black};
}

// One pass of stochastic updates. Neighbor averages are computed from
// `ratings` on entry and held fixed for the pass; games are visited in a
// fresh permutation drawn from `rng`. `epoch` is 1-based and selects the
// learning rate against hyper.iterations.
void SgdEpoch(const TrainingProblem& problem, std::span<double> ratings,
              const Hyperparams& hyper, int epoch, Rng& rng);

struct TrainReport {
  RatingTable ratings;
  // Total loss before training (index 0) and after each epoch run.
  std::vector<double> loss;
  // Mean squared prediction error on the validation split, one entry per
  // epoch run. Set only when early-out is configured.
  std::optional<std::vector<double>> validation_loss;
  bool stopped_early = false;
  int epochs_run = 0;
  // Epoch whose ratings were returned.
  int best_epoch = 0;
};

// Splits off the validation tail used by early-out: whole months, latest
// first, until at least `fraction` of the games are covered. Throws
// InvalidArgumentError when this would leave no training games.
std::pair<Dataset, Dataset> ValidationSplit(const Dataset& dataset,
                                            double fraction);

// Trains ratings from zero. Deterministic for a fixed seed. Throws
// InvalidArgumentError on an empty dataset or invalid hyperparameters,
// ValidationError on games without outcomes, and DivergenceError when the
// loss becomes non-finite or a rating exceeds kDivergenceBound.
TrainReport Train(const Dataset& dataset, const Hyperparams& hyper);

}  // namespace eloplus

#endif  // ELOPLUS_TRAINER_H_
