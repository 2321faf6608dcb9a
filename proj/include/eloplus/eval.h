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

#ifndef ELOPLUS_EVAL_H_
#define ELOPLUS_EVAL_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eloplus/core.h"
#include "eloplus/trainer.h"

namespace eloplus {

struct Prediction {
  GameRecord game;
  double expected = 0.5;  // predicted white score
};

using PredictionSet = std::vector<Prediction>;

// Predicts every game in order. Players absent from `ratings` are rated 0.
PredictionSet Predict(const Dataset& dataset, const RatingTable& ratings,
                      double gamma);

// sqrt(mean((expected - outcome)^2)). Throws InvalidArgumentError on an
// empty set and ValidationError when a game lacks its outcome.
double Rmse(std::span<const Prediction> predictions);

// Player/month aggregated RMSE. Each game yields a (player, month) score for
// both sides, white scoring o and black 1 - o, predictions likewise. Within
// a (player, month) group of n games the error is the mean of
// (predicted - actual); the metric is sqrt(sum n e^2 / sum n). This is an
// approximation of the competition metric, whose exact form is unpublished.
double PmRmse(std::span<const Prediction> predictions);

struct EvalReport {
  double rmse = 0.0;
  double pm_rmse = 0.0;
  std::size_t games = 0;
  std::size_t player_months = 0;
};

EvalReport Evaluate(std::span<const Prediction> predictions);

struct TimeSplitResult {
  Dataset train;
  Dataset holdout;
};

// Holds out every game with month > t_max - tail_months. Throws RangeError
// if either side would be empty.
TimeSplitResult TimeSplit(const Dataset& dataset, int tail_months);

enum class Metric { kRmse, kPmRmse };

std::string_view MetricName(Metric metric);
// Accepts "rmse" and "pm_rmse"; throws InvalidArgumentError otherwise.
Metric ParseMetric(std::string_view name);

struct GridPoint {
  double gamma = 0.0;
  double lambda = 0.0;
  double metric = 0.0;  // +infinity when training diverged
  bool failed = false;
};

struct TuneResult {
  double best_gamma = 0.0;
  double best_lambda = 0.0;
  double best_metric = 0.0;
  std::size_t best_index = 0;
  std::vector<GridPoint> grid;  // gammas outer, lambdas inner
  Metric metric = Metric::kRmse;
};

inline const std::vector<double> kDefaultGammaGrid = {0.0, 0.1, 0.2, 0.3};
inline const std::vector<double> kDefaultLambdaGrid = {0.2, 0.4, 0.6, 0.77,
                                                       1.0};
inline constexpr int kDefaultTailMonths = 5;

// Trains on the time split's head for each (gamma, lambda) pair and scores
// the tail. Ties go to the earliest grid point. `jobs` > 1 evaluates grid
// points on that many threads; results are identical to jobs = 1.
TuneResult GridTune(const Dataset& dataset, std::span<const double> gammas,
                    std::span<const double> lambdas,
                    const Hyperparams& base, int tail_months, Metric metric,
                    int jobs = 1);

}  // namespace eloplus

#endif  // ELOPLUS_EVAL_H_
