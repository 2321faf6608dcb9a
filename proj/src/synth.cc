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

#include "eloplus/synth.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "eloplus/error.h"
#include "eloplus/normalize.h"
#include "eloplus/rng.h"

namespace eloplus {
namespace {

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l,
                                                   std::size_t r) {
    return values[l] < values[r];
  });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
      ++j;
    }
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

void SynthConfig::Validate() const {
  if (players < 2) throw ValidationError("need at least two players");
  if (games < 1) throw ValidationError("need at least one game");
  if (months < 1) throw ValidationError("need at least one month");
  if (!(draw_fraction >= 0.0 && draw_fraction < 1.0)) {
    throw ValidationError("draw_fraction must be in [0, 1)");
  }
  if (!(latent_spread > 0.0) || !std::isfinite(latent_spread)) {
    throw ValidationError("latent_spread must be positive");
  }
  if (!(tournament_locality >= 0.0) || !std::isfinite(tournament_locality)) {
    throw ValidationError("tournament_locality must be >= 0");
  }
  if (!std::isfinite(gamma_true)) {
    throw ValidationError("gamma_true must be finite");
  }
}

SynthResult Generate(const SynthConfig& config) {
  config.Validate();
  Rng rng(config.seed);
  SynthResult result;

  std::vector<double> latent(static_cast<std::size_t>(config.players));
  for (std::size_t i = 0; i < latent.size(); ++i) {
    latent[i] = config.latent_spread * rng.NextNormal();
    result.latent.emplace(PlayerId{i + 1}, latent[i]);
  }

  const auto n = static_cast<std::uint64_t>(config.players);
  result.dataset.games.reserve(static_cast<std::size_t>(config.games));
  for (int g = 0; g < config.games; ++g) {
    const std::uint64_t white = rng.NextBelow(n);
    std::uint64_t black = 0;
    while (true) {
      black = rng.NextBelow(n - 1);
      if (black >= white) ++black;
      const double gap = std::abs(latent[white] - latent[black]);
      if (config.tournament_locality == 0.0 ||
          rng.NextDouble() < std::exp(-config.tournament_locality * gap)) {
        break;
      }
    }
    const int month = 1 + static_cast<int>(rng.NextBelow(
                              static_cast<std::uint64_t>(config.months)));

    const double p = PredictOutcomeUnchecked(latent[white], latent[black],
                                             config.gamma_true);
    const double draw = config.draw_fraction * 4.0 * p * (1.0 - p);
    double outcome = 0.5;
    if (rng.NextDouble() >= draw) {
      const double win = std::clamp((p - draw / 2.0) / (1.0 - draw), 0.0, 1.0);
      outcome = rng.NextDouble() < win ? 1.0 : 0.0;
    }
    result.dataset.games.push_back(
        {PlayerId{white + 1}, PlayerId{black + 1}, month, outcome});
  }
  std::stable_sort(result.dataset.games.begin(), result.dataset.games.end(),
                   [](const GameRecord& l, const GameRecord& r) {
                     return l.month < r.month;
                   });
  return result;
}

RatingTable EloBaseline(const Dataset& dataset, double k_factor,
                        double start) {
  std::vector<const GameRecord*> ordered;
  ordered.reserve(dataset.size());
  for (const GameRecord& game : dataset.games) {
    ValidateGame(game, true);
    ordered.push_back(&game);
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const GameRecord* l, const GameRecord* r) {
                     return l->month < r->month;
                   });
  RatingTable ratings;
  for (const GameRecord* game : ordered) {
    double& white = ratings.try_emplace(game->white, start).first->second;
    double& black = ratings.try_emplace(game->black, start).first->second;
    const double expected =
        1.0 / (1.0 + std::pow(10.0, (black - white) / 400.0));
    const double delta = k_factor * (*game->outcome - expected);
    white += delta;
    black -= delta;
  }
  return ratings;
}

double SpearmanCorrelation(std::span<const double> x,
                           std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidArgumentError("need two equal-length series of size >= 2");
  }
  const std::vector<double> rx = AverageRanks(x);
  const std::vector<double> ry = AverageRanks(y);
  const double mean = 0.5 * static_cast<double>(x.size() + 1);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  return sxy / std::sqrt(sxx * syy);
}

double SpearmanCorrelation(const RatingTable& a, const RatingTable& b) {
  std::vector<double> x;
  std::vector<double> y;
  for (const ScatterRow& row : ExportScatter(a, b)) {
    x.push_back(row.a);
    y.push_back(row.b);
  }
  return SpearmanCorrelation(x, y);
}

}  // namespace eloplus
