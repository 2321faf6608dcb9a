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

#include "eloplus/trainer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "eloplus/error.h"

namespace eloplus {
namespace {

std::pair<int, int> MonthRange(const Dataset& dataset) {
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const GameRecord& game : dataset.games) {
    lo = std::min(lo, game.month);
    hi = std::max(hi, game.month);
  }
  return {lo, hi};
}

double MeanSquaredError(std::span<const IndexedGame> games,
                        std::span<const double> ratings, double gamma) {
  double sum = 0.0;
  for (const IndexedGame& g : games) {
    const double err =
        PredictOutcomeUnchecked(ratings[g.white], ratings[g.black], gamma) -
        g.outcome;
    sum += err * err;
  }
  return sum / static_cast<double>(games.size());
}

void CheckBounded(std::span<const double> ratings, int epoch) {
  for (double r : ratings) {
    if (!std::isfinite(r) || std::abs(r) > kDivergenceBound) {
      throw DivergenceError(epoch, "rating magnitude " + std::to_string(r) +
                                       " exceeds bound");
    }
  }
}

RatingTable ToTable(const DatasetIndex& index,
                    std::span<const double> ratings) {
  RatingTable table;
  for (std::size_t i = 0; i < ratings.size(); ++i) {
    table.emplace_hint(table.end(), index.players()[i], ratings[i]);
  }
  return table;
}

}  // namespace

void Hyperparams::Validate() const {
  if (!std::isfinite(gamma)) {
    throw InvalidArgumentError("gamma must be finite");
  }
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw InvalidArgumentError("lambda must be finite and >= 0");
  }
  if (iterations < 1) throw InvalidArgumentError("iterations must be >= 1");
  if (early_out.has_value()) {
    if (!(early_out->validation_fraction > 0.0 &&
          early_out->validation_fraction < 1.0)) {
      throw InvalidArgumentError("validation fraction must be in (0, 1)");
    }
    if (early_out->patience < 1) {
      throw InvalidArgumentError("patience must be >= 1");
    }
  }
}

double LearningRate(int epoch, int total_epochs) {
  if (epoch < 1 || epoch > total_epochs) {
    throw RangeError("epoch " + std::to_string(epoch) + " outside [1, " +
                     std::to_string(total_epochs) + "]");
  }
  const double slack = 0.1 * total_epochs;
  return std::pow((1.0 + slack) / (epoch + slack), 0.602);
}

TrainingProblem::TrainingProblem(const Dataset& training, DatasetIndex domain)
    : index_(std::move(domain)) {
  if (training.empty()) {
    throw InvalidArgumentError("training dataset is empty");
  }
  const auto [t_min, t_max] = MonthRange(training);
  const std::vector<double> weights =
      ComputeTimeWeights(training, t_min, t_max);
  games_.reserve(training.size());
  for (std::size_t g = 0; g < training.size(); ++g) {
    const GameRecord& game = training.games[g];
    if (!game.outcome.has_value()) {
      throw ValidationError("training game " + std::to_string(g + 1) +
                            " has no outcome");
    }
    games_.push_back({static_cast<std::uint32_t>(index_.at(game.white)),
                      static_cast<std::uint32_t>(index_.at(game.black)),
                      weights[g], *game.outcome});
  }
  neighborhoods_ = BuildNeighborhoods(training, index_, weights);
}

TrainingProblem::TrainingProblem(const Dataset& training)
    : TrainingProblem(training, DatasetIndex::Build(training)) {}

double TotalLoss(const TrainingProblem& problem,
                 std::span<const double> ratings,
                 std::span<const double> averages, double gamma,
                 double lambda) {
  if (ratings.size() != problem.player_count() ||
      averages.size() != problem.player_count()) {
    throw InvalidArgumentError("one rating and average per player required");
  }
  double data = 0.0;
  for (const IndexedGame& g : problem.games()) {
    const double err =
        PredictOutcomeUnchecked(ratings[g.white], ratings[g.black], gamma) -
        g.outcome;
    data += g.weight * err * err;
  }
  double reg = 0.0;
  for (std::size_t i = 0; i < ratings.size(); ++i) {
    const double d = ratings[i] - averages[i];
    reg += d * d;
  }
  return data + lambda * reg;
}

double TotalLoss(const Dataset& dataset, const RatingTable& ratings,
                 const Hyperparams& hyper) {
  std::vector<double> weights;
  if (!dataset.empty()) {
    const auto [t_min, t_max] = MonthRange(dataset);
    weights = ComputeTimeWeights(dataset, t_min, t_max);
  }
  auto rating_of = [&](PlayerId id) {
    auto it = ratings.find(id);
    if (it == ratings.end()) {
      throw ConsistencyError("no rating for player " +
                             std::to_string(id.value));
    }
    return it->second;
  };
  std::map<PlayerId, std::pair<double, double>> sums;  // sum w r, sum w
  double data = 0.0;
  for (std::size_t g = 0; g < dataset.size(); ++g) {
    const GameRecord& game = dataset.games[g];
    if (!game.outcome.has_value()) {
      throw ValidationError("game " + std::to_string(g + 1) +
                            " has no outcome");
    }
    const double r_white = rating_of(game.white);
    const double r_black = rating_of(game.black);
    const double err =
        PredictOutcome(r_white, r_black, hyper.gamma) - *game.outcome;
    data += weights[g] * err * err;
    auto& w = sums[game.white];
    w.first += weights[g] * r_black;
    w.second += weights[g];
    auto& b = sums[game.black];
    b.first += weights[g] * r_white;
    b.second += weights[g];
  }
  double reg = 0.0;
  for (const auto& [id, r] : ratings) {
    double average = 0.0;
    if (auto it = sums.find(id); it != sums.end() && it->second.second > 0) {
      average = it->second.first / it->second.second;
    }
    reg += (r - average) * (r - average);
  }
  return data + hyper.lambda * reg;
}

void SgdEpoch(const TrainingProblem& problem, std::span<double> ratings,
              const Hyperparams& hyper, int epoch, Rng& rng) {
  if (ratings.size() != problem.player_count()) {
    throw InvalidArgumentError("one rating per player is required");
  }
  const double eta = LearningRate(epoch, hyper.iterations);
  const std::vector<double> averages = problem.NeighborAveragesOf(ratings);
  const Neighborhoods& hoods = problem.neighborhoods();
  const std::span<const IndexedGame> games = problem.games();

  std::vector<std::size_t> order(games.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Shuffle(std::span<std::size_t>(order), rng);

  for (std::size_t g : order) {
    const IndexedGame& game = games[g];
    const TupleState state{ratings[game.white],      ratings[game.black],
                           averages[game.white],     averages[game.black],
                           hoods.size(game.white),   hoods.size(game.black),
                           game.weight,              game.outcome};
    const auto [white, black] =
        UpdatedRatings(state, hyper.gamma, hyper.lambda, eta);
    ratings[game.white] = white;
    ratings[game.black] = black;
  }
}

std::pair<Dataset, Dataset> ValidationSplit(const Dataset& dataset,
                                            double fraction) {
  std::map<int, std::size_t> per_month;
  for (const GameRecord& game : dataset.games) ++per_month[game.month];
  if (per_month.size() < 2) {
    throw InvalidArgumentError(
        "early-out needs games from at least two months");
  }
  const double target = fraction * static_cast<double>(dataset.size());
  std::size_t covered = 0;
  int first_validation_month = per_month.rbegin()->first;
  for (auto it = per_month.rbegin(); it != per_month.rend(); ++it) {
    if (std::next(it) == per_month.rend()) break;  // keep one training month
    first_validation_month = it->first;
    covered += it->second;
    if (static_cast<double>(covered) >= target) break;
  }
  Dataset train;
  Dataset validation;
  for (const GameRecord& game : dataset.games) {
    (game.month >= first_validation_month ? validation : train)
        .games.push_back(game);
  }
  return {std::move(train), std::move(validation)};
}

TrainReport Train(const Dataset& dataset, const Hyperparams& hyper) {
  hyper.Validate();
  if (dataset.empty()) throw InvalidArgumentError("dataset is empty");
  for (const GameRecord& game : dataset.games) ValidateGame(game, true);

  Dataset training_part;
  Dataset validation_part;
  if (hyper.early_out.has_value()) {
    std::tie(training_part, validation_part) =
        ValidationSplit(dataset, hyper.early_out->validation_fraction);
  }
  const Dataset& training =
      hyper.early_out.has_value() ? training_part : dataset;
  const TrainingProblem problem(training, DatasetIndex::Build(dataset));

  std::vector<IndexedGame> validation_games;
  for (const GameRecord& game : validation_part.games) {
    validation_games.push_back(
        {static_cast<std::uint32_t>(problem.index().at(game.white)),
         static_cast<std::uint32_t>(problem.index().at(game.black)), 1.0,
         *game.outcome});
  }

  std::vector<double> ratings(problem.player_count(), 0.0);
  TrainReport report;
  auto record_loss = [&](int epoch) {
    const double loss = TotalLoss(problem, ratings,
                                  problem.NeighborAveragesOf(ratings),
                                  hyper.gamma, hyper.lambda);
    if (!std::isfinite(loss)) throw DivergenceError(epoch, "non-finite loss");
    report.loss.push_back(loss);
  };
  record_loss(0);

  std::vector<double> best = ratings;
  double best_validation = std::numeric_limits<double>::infinity();
  int increases = 0;
  if (hyper.early_out.has_value()) report.validation_loss.emplace();

  Rng rng(hyper.seed);
  for (int epoch = 1; epoch <= hyper.iterations; ++epoch) {
    SgdEpoch(problem, ratings, hyper, epoch, rng);
    CheckBounded(ratings, epoch);
    record_loss(epoch);
    report.epochs_run = epoch;
    if (!hyper.early_out.has_value()) continue;

    const double validation =
        MeanSquaredError(validation_games, ratings, hyper.gamma);
    auto& history = *report.validation_loss;
    if (!history.empty() && validation > history.back()) {
      ++increases;
    } else {
      increases = 0;
    }
    history.push_back(validation);
    if (validation < best_validation) {
      best_validation = validation;
      best = ratings;
      report.best_epoch = epoch;
    }
    if (increases >= hyper.early_out->patience) {
      report.stopped_early = epoch < hyper.iterations;
      break;
    }
  }
  if (!hyper.early_out.has_value()) {
    best = ratings;
    report.best_epoch = report.epochs_run;
  }
  report.ratings = ToTable(problem.index(), best);
  return report;
}

}  // namespace eloplus
