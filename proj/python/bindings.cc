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

// Python bindings. Games cross the boundary as (month, white, black, score)
// tuples with score None for unplayed games; rating tables as dicts keyed by
// integer player id.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "eloplus/core.h"
#include "eloplus/csv_io.h"
#include "eloplus/error.h"
#include "eloplus/eval.h"
#include "eloplus/normalize.h"
#include "eloplus/synth.h"
#include "eloplus/trainer.h"

namespace py = pybind11;

namespace eloplus {
namespace {

using GameTuple = std::tuple<int, std::uint64_t, std::uint64_t,
                             std::optional<double>>;
using PyRatings = std::map<std::uint64_t, double>;

Dataset ToDataset(const std::vector<GameTuple>& games) {
  Dataset dataset;
  dataset.games.reserve(games.size());
  for (const auto& [month, white, black, score] : games) {
    GameRecord game{PlayerId{white}, PlayerId{black}, month, score};
    ValidateGame(game, false);
    dataset.games.push_back(game);
  }
  return dataset;
}

std::vector<GameTuple> FromDataset(const Dataset& dataset) {
  std::vector<GameTuple> games;
  games.reserve(dataset.size());
  for (const GameRecord& g : dataset.games) {
    games.emplace_back(g.month, g.white.value, g.black.value, g.outcome);
  }
  return games;
}

RatingTable ToTable(const PyRatings& ratings) {
  RatingTable table;
  for (const auto& [id, r] : ratings) table.emplace(PlayerId{id}, r);
  return table;
}

PyRatings FromTable(const RatingTable& table) {
  PyRatings ratings;
  for (const auto& [id, r] : table) ratings.emplace(id.value, r);
  return ratings;
}

PredictionSet Scored(const std::vector<GameTuple>& games,
                     const std::vector<double>& expected) {
  if (games.size() != expected.size()) {
    throw InvalidArgumentError("one prediction per game is required");
  }
  const Dataset dataset = ToDataset(games);
  PredictionSet set;
  for (std::size_t i = 0; i < games.size(); ++i) {
    set.push_back({dataset.games[i], expected[i]});
  }
  return set;
}

}  // namespace
}  // namespace eloplus

PYBIND11_MODULE(_eloplus, m) {
  using namespace eloplus;
  m.doc() = "Elo++ rating engine";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgumentError>(m, "InvalidArgumentError",
                                               base.ptr());
  py::register_exception<RangeError>(m, "RangeError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DivergenceError>(m, "DivergenceError", base.ptr());

  m.attr("ELO_SCALE") = kEloScale;
  m.attr("DEFAULT_ELO_OFFSET") = kDefaultEloOffset;

  m.def("predict_outcome", &PredictOutcome, py::arg("r_white"),
        py::arg("r_black"), py::arg("gamma"));
  m.def("time_weight", &TimeWeight, py::arg("t"), py::arg("t_min"),
        py::arg("t_max"));
  m.def("learning_rate", &LearningRate, py::arg("epoch"),
        py::arg("total_epochs"));

  py::class_<TrainReport>(m, "TrainReport")
      .def_property_readonly("ratings",
                             [](const TrainReport& r) {
                               return FromTable(r.ratings);
                             })
      .def_readonly("loss", &TrainReport::loss)
      .def_readonly("validation_loss", &TrainReport::validation_loss)
      .def_readonly("stopped_early", &TrainReport::stopped_early)
      .def_readonly("epochs_run", &TrainReport::epochs_run)
      .def_readonly("best_epoch", &TrainReport::best_epoch);

  m.def(
      "train",
      [](const std::vector<GameTuple>& games, double gamma, double lambda,
         int iterations, std::uint64_t seed,
         std::optional<double> validation_fraction, int patience) {
        Hyperparams h;
        h.gamma = gamma;
        h.lambda = lambda;
        h.iterations = iterations;
        h.seed = seed;
        if (validation_fraction) {
          h.early_out = EarlyOut{*validation_fraction, patience};
        }
        const Dataset dataset = ToDataset(games);
        py::gil_scoped_release release;
        return Train(dataset, h);
      },
      py::arg("games"), py::arg("gamma") = kDefaultGamma,
      py::arg("lambda_") = kDefaultLambda,
      py::arg("iterations") = kDefaultIterations, py::arg("seed") = 1,
      py::arg("validation_fraction") = py::none(),
      py::arg("patience") = EarlyOut{}.patience,
      "Train ratings from (month, white, black, score) tuples. Passing "
      "validation_fraction enables early-out.");

  m.def(
      "predict",
      [](const std::vector<GameTuple>& games, const PyRatings& ratings,
         double gamma) {
        std::vector<double> out;
        for (const Prediction& p :
             Predict(ToDataset(games), ToTable(ratings), gamma)) {
          out.push_back(p.expected);
        }
        return out;
      },
      py::arg("games"), py::arg("ratings"), py::arg("gamma") = kDefaultGamma);

  m.def(
      "rmse",
      [](const std::vector<GameTuple>& games,
         const std::vector<double>& expected) {
        return Rmse(Scored(games, expected));
      },
      py::arg("games"), py::arg("expected"));
  m.def(
      "pm_rmse",
      [](const std::vector<GameTuple>& games,
         const std::vector<double>& expected) {
        return PmRmse(Scored(games, expected));
      },
      py::arg("games"), py::arg("expected"));

  m.def(
      "time_split",
      [](const std::vector<GameTuple>& games, int tail_months) {
        const TimeSplitResult split = TimeSplit(ToDataset(games), tail_months);
        return std::make_pair(FromDataset(split.train),
                              FromDataset(split.holdout));
      },
      py::arg("games"), py::arg("tail_months") = kDefaultTailMonths);

  py::class_<GridPoint>(m, "GridPoint")
      .def_readonly("gamma", &GridPoint::gamma)
      .def_readonly("lambda_", &GridPoint::lambda)
      .def_readonly("metric", &GridPoint::metric)
      .def_readonly("failed", &GridPoint::failed);
  py::class_<TuneResult>(m, "TuneResult")
      .def_readonly("best_gamma", &TuneResult::best_gamma)
      .def_readonly("best_lambda", &TuneResult::best_lambda)
      .def_readonly("best_metric", &TuneResult::best_metric)
      .def_readonly("grid", &TuneResult::grid);

  m.def(
      "grid_tune",
      [](const std::vector<GameTuple>& games, std::vector<double> gammas,
         std::vector<double> lambdas, int tail_months,
         const std::string& metric, int iterations, std::uint64_t seed,
         int jobs) {
        Hyperparams h;
        h.iterations = iterations;
        h.seed = seed;
        const Dataset dataset = ToDataset(games);
        const Metric parsed = ParseMetric(metric);
        py::gil_scoped_release release;
        return GridTune(dataset, gammas, lambdas, h, tail_months, parsed,
                        jobs);
      },
      py::arg("games"), py::arg("gammas") = kDefaultGammaGrid,
      py::arg("lambdas") = kDefaultLambdaGrid,
      py::arg("tail_months") = kDefaultTailMonths,
      py::arg("metric") = "rmse", py::arg("iterations") = kDefaultIterations,
      py::arg("seed") = 1, py::arg("jobs") = 1);

  m.def(
      "to_elo_scale",
      [](const PyRatings& ratings, double scale, double offset,
         std::optional<double> match_mean) {
        return FromTable(ToEloScale(ToTable(ratings),
                                    {scale, offset, match_mean}));
      },
      py::arg("ratings"), py::arg("scale") = kEloScale,
      py::arg("offset") = kDefaultEloOffset,
      py::arg("match_mean") = py::none());

  m.def(
      "export_histogram",
      [](const PyRatings& ratings, double bucket_width) {
        std::vector<std::pair<double, std::size_t>> rows;
        for (const HistogramBucket& b :
             ExportHistogram(ToTable(ratings), bucket_width)) {
          rows.emplace_back(b.lower, b.count);
        }
        return rows;
      },
      py::arg("ratings"), py::arg("bucket_width") = kDefaultBucketWidth);
  m.def(
      "export_scatter",
      [](const PyRatings& a, const PyRatings& b) {
        std::vector<std::tuple<std::uint64_t, double, double>> rows;
        for (const ScatterRow& row : ExportScatter(ToTable(a), ToTable(b))) {
          rows.emplace_back(row.player.value, row.a, row.b);
        }
        return rows;
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "generate",
      [](int players, int games, int months, double gamma_true,
         double draw_fraction, double latent_spread,
         double tournament_locality, std::uint64_t seed) {
        const SynthResult r =
            Generate({players, games, months, gamma_true, draw_fraction,
                      latent_spread, tournament_locality, seed});
        return std::make_pair(FromDataset(r.dataset), FromTable(r.latent));
      },
      py::arg("players") = SynthConfig{}.players,
      py::arg("games") = SynthConfig{}.games,
      py::arg("months") = SynthConfig{}.months,
      py::arg("gamma_true") = SynthConfig{}.gamma_true,
      py::arg("draw_fraction") = SynthConfig{}.draw_fraction,
      py::arg("latent_spread") = SynthConfig{}.latent_spread,
      py::arg("tournament_locality") = SynthConfig{}.tournament_locality,
      py::arg("seed") = SynthConfig{}.seed);

  m.def(
      "elo_baseline",
      [](const std::vector<GameTuple>& games, double k_factor) {
        return FromTable(EloBaseline(ToDataset(games), k_factor));
      },
      py::arg("games"), py::arg("k_factor") = kDefaultKFactor);

  m.def(
      "spearman",
      [](const PyRatings& a, const PyRatings& b) {
        return SpearmanCorrelation(ToTable(a), ToTable(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "load_games",
      [](const std::filesystem::path& path, bool require_outcomes) {
        return FromDataset(LoadGames(path, require_outcomes).dataset);
      },
      py::arg("path"), py::arg("require_outcomes") = true);
  m.def(
      "save_games",
      [](const std::filesystem::path& path,
         const std::vector<GameTuple>& games) {
        SaveGames(path, ToDataset(games));
      },
      py::arg("path"), py::arg("games"));
  m.def(
      "load_ratings",
      [](const std::filesystem::path& path) {
        return FromTable(LoadRatings(path));
      },
      py::arg("path"));
  m.def(
      "save_ratings",
      [](const std::filesystem::path& path, const PyRatings& ratings) {
        SaveRatings(path, ToTable(ratings));
      },
      py::arg("path"), py::arg("ratings"));
}
