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

#include "eloplus/eval.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <thread>
#include <utility>

#include "eloplus/error.h"

namespace eloplus {
namespace {

void CheckScorable(std::span<const Prediction> predictions) {
  if (predictions.empty()) {
    throw InvalidArgumentError("prediction set is empty");
  }
  for (const Prediction& p : predictions) {
    if (!p.game.outcome.has_value()) {
      throw ValidationError("prediction has no outcome to score against");
    }
  }
}

struct GroupSum {
  double error = 0.0;  // sum of predicted - actual
  std::size_t games = 0;
};

std::map<std::pair<PlayerId, int>, GroupSum> PlayerMonthGroups(
    std::span<const Prediction> predictions) {
  std::map<std::pair<PlayerId, int>, GroupSum> groups;
  for (const Prediction& p : predictions) {
    const double o = *p.game.outcome;
    auto& white = groups[{p.game.white, p.game.month}];
    white.error += p.expected - o;
    ++white.games;
    auto& black = groups[{p.game.black, p.game.month}];
    black.error += (1.0 - p.expected) - (1.0 - o);
    ++black.games;
  }
  return groups;
}

double ScoreMetric(const PredictionSet& predictions, Metric metric) {
  return metric == Metric::kRmse ? Rmse(predictions) : PmRmse(predictions);
}

}  // namespace

PredictionSet Predict(const Dataset& dataset, const RatingTable& ratings,
                      double gamma) {
  auto rating_of = [&](PlayerId id) {
    auto it = ratings.find(id);
    return it == ratings.end() ? 0.0 : it->second;
  };
  PredictionSet out;
  out.reserve(dataset.size());
  for (const GameRecord& game : dataset.games) {
    out.push_back(
        {game, PredictOutcome(rating_of(game.white), rating_of(game.black),
                              gamma)});
  }
  return out;
}

double Rmse(std::span<const Prediction> predictions) {
  CheckScorable(predictions);
  double sum = 0.0;
  for (const Prediction& p : predictions) {
    const double err = p.expected - *p.game.outcome;
    sum += err * err;
  }
  return std::sqrt(sum / static_cast<double>(predictions.size()));
}

double PmRmse(std::span<const Prediction> predictions) {
  CheckScorable(predictions);
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& [key, group] : PlayerMonthGroups(predictions)) {
    const double n = static_cast<double>(group.games);
    const double e = group.error / n;
    weighted += n * e * e;
    total += n;
  }
  return std::sqrt(weighted / total);
}

EvalReport Evaluate(std::span<const Prediction> predictions) {
  EvalReport report;
  report.rmse = Rmse(predictions);
  report.pm_rmse = PmRmse(predictions);
  report.games = predictions.size();
  report.player_months = PlayerMonthGroups(predictions).size();
  return report;
}

TimeSplitResult TimeSplit(const Dataset& dataset, int tail_months) {
  if (dataset.empty()) throw InvalidArgumentError("dataset is empty");
  if (tail_months < 1) throw RangeError("tail_months must be >= 1");
  const DatasetIndex index = DatasetIndex::Build(dataset);
  const int cutoff = index.t_max() - tail_months;
  TimeSplitResult split;
  for (const GameRecord& game : dataset.games) {
    (game.month > cutoff ? split.holdout : split.train).games.push_back(game);
  }
  if (split.train.empty() || split.holdout.empty()) {
    throw RangeError("tail of " + std::to_string(tail_months) +
                     " months leaves an empty train or hold-out set");
  }
  return split;
}

std::string_view MetricName(Metric metric) {
  return metric == Metric::kRmse ? "rmse" : "pm_rmse";
}

Metric ParseMetric(std::string_view name) {
  if (name == "rmse") return Metric::kRmse;
  if (name == "pm_rmse") return Metric::kPmRmse;
  throw InvalidArgumentError("unknown metric '" + std::string(name) + "'");
}

TuneResult GridTune(const Dataset& dataset, std::span<const double> gammas,
                    std::span<const double> lambdas,
                    const Hyperparams& base, int tail_months, Metric metric,
                    int jobs) {
  if (gammas.empty() || lambdas.empty()) {
    throw InvalidArgumentError("tuning grids must be non-empty");
  }
  const TimeSplitResult split = TimeSplit(dataset, tail_months);

  TuneResult result;
  result.metric = metric;
  for (double gamma : gammas) {
    for (double lambda : lambdas) result.grid.push_back({gamma, lambda});
  }

  auto evaluate = [&](GridPoint& point) {
    Hyperparams hyper = base;
    hyper.gamma = point.gamma;
    hyper.lambda = point.lambda;
    try {
      const TrainReport report = Train(split.train, hyper);
      point.metric = ScoreMetric(
          Predict(split.holdout, report.ratings, point.gamma), metric);
    } catch (const DivergenceError&) {
      point.metric = std::numeric_limits<double>::infinity();
      point.failed = true;
    }
  };

  const std::size_t workers = static_cast<std::size_t>(
      std::clamp<int>(jobs, 1, static_cast<int>(result.grid.size())));
  if (workers == 1) {
    for (GridPoint& point : result.grid) evaluate(point);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = next++; i < result.grid.size(); i = next++) {
              evaluate(result.grid[i]);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  const GridPoint* best = &result.grid.front();
  for (const GridPoint& point : result.grid) {
    if (point.metric < best->metric) best = &point;
  }
  result.best_gamma = best->gamma;
  result.best_lambda = best->lambda;
  result.best_metric = best->metric;
  result.best_index = static_cast<std::size_t>(best - result.grid.data());
  return result;
}

}  // namespace eloplus
