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

// Command-line front end: train, predict, evaluate, tune, normalize, export
// and synth. Exit codes: 0 success, 1 usage, 2 validation/parse/io,
// 3 divergence.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eloplus/core.h"
#include "eloplus/csv_io.h"
#include "eloplus/error.h"
#include "eloplus/eval.h"
#include "eloplus/normalize.h"
#include "eloplus/synth.h"
#include "eloplus/trainer.h"

namespace {

using namespace eloplus;

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDivergence = 3;

// Flag combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrainArgs {
  std::string games;
  std::string out_ratings;
  std::string columns;
  Hyperparams hyper;
  bool early_out = false;
  double validation_fraction = EarlyOut{}.validation_fraction;
  int patience = EarlyOut{}.patience;
  bool report_loss = false;
};

struct PredictArgs {
  std::string games;
  std::string ratings;
  std::string out;
  std::string columns;
  double gamma = kDefaultGamma;
};

struct EvaluateArgs {
  std::string games;
  std::string ratings;
  std::string predictions;
  std::string columns;
  std::string metric = "both";
  double gamma = kDefaultGamma;
};

struct TuneArgs {
  std::string games;
  std::string out_grid;
  std::string columns;
  std::vector<double> gammas = kDefaultGammaGrid;
  std::vector<double> lambdas = kDefaultLambdaGrid;
  int tail_months = kDefaultTailMonths;
  std::string metric = "rmse";
  int iterations = kDefaultIterations;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct NormalizeArgs {
  std::string ratings;
  std::string out;
  double scale = kEloScale;
  double offset = kDefaultEloOffset;
  std::optional<double> match_mean;
};

struct ExportArgs {
  std::string ratings;
  std::string ratings_b;
  std::string out;
  bool histogram = false;
  bool scatter = false;
  double bucket_width = kDefaultBucketWidth;
};

struct SynthArgs {
  SynthConfig config;
  std::string out_games;
  std::string out_latent;
};

ColumnMap Columns(const std::string& spec) {
  return spec.empty() ? ColumnMap{} : ColumnMap::Parse(spec);
}

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void RunTrain(const TrainArgs& args) {
  Hyperparams hyper = args.hyper;
  if (args.early_out) {
    hyper.early_out = EarlyOut{args.validation_fraction, args.patience};
  }
  const LoadedGames loaded =
      LoadGames(args.games, /*require_outcomes=*/true, Columns(args.columns));
  const TrainReport report = Train(loaded.dataset, hyper);
  SaveRatings(args.out_ratings, report.ratings);

  std::cout << "players=" << report.ratings.size()
            << " games=" << loaded.dataset.size()
            << " epochs=" << report.epochs_run
            << " best_epoch=" << report.best_epoch
            << " stopped_early=" << (report.stopped_early ? "true" : "false")
            << " final_loss=" << FormatDouble(report.loss.back()) << '\n';
  if (args.report_loss) {
    std::cout << "epoch,loss";
    if (report.validation_loss) std::cout << ",validation_loss";
    std::cout << '\n';
    for (std::size_t e = 0; e < report.loss.size(); ++e) {
      std::cout << e << ',' << FormatDouble(report.loss[e]);
      if (report.validation_loss) {
        std::cout << ',';
        if (e > 0) std::cout << FormatDouble((*report.validation_loss)[e - 1]);
      }
      std::cout << '\n';
    }
  }
}

void RunPredict(const PredictArgs& args) {
  const LoadedGames loaded =
      LoadGames(args.games, /*require_outcomes=*/false, Columns(args.columns));
  const PredictionSet predictions =
      Predict(loaded.dataset, LoadRatings(args.ratings), args.gamma);
  if (args.out.empty()) {
    WritePredictions(std::cout, predictions);
  } else {
    SavePredictions(args.out, predictions);
  }
}

void RunEvaluate(const EvaluateArgs& args) {
  if (args.ratings.empty() == args.predictions.empty()) {
    throw UsageError("exactly one of --ratings or --predictions is required");
  }
  const LoadedGames loaded =
      LoadGames(args.games, /*require_outcomes=*/true, Columns(args.columns));
  PredictionSet predictions;
  if (!args.ratings.empty()) {
    predictions = Predict(loaded.dataset, LoadRatings(args.ratings),
                          args.gamma);
  } else {
    predictions = LoadPredictions(args.predictions);
    if (predictions.size() != loaded.dataset.size()) {
      throw ValidationError("predictions file has " +
                            std::to_string(predictions.size()) +
                            " rows but games file has " +
                            std::to_string(loaded.dataset.size()));
    }
    for (std::size_t i = 0; i < predictions.size(); ++i) {
      const GameRecord& game = loaded.dataset.games[i];
      GameRecord& predicted = predictions[i].game;
      if (predicted.month != game.month || predicted.white != game.white ||
          predicted.black != game.black) {
        throw ValidationError("prediction row " + std::to_string(i + 2) +
                              " does not match the games file");
      }
      predicted.outcome = game.outcome;
    }
  }
  const EvalReport report = Evaluate(predictions);
  const bool both = args.metric == "both";
  if (both || args.metric == "rmse") {
    std::cout << "rmse=" << FormatDouble(report.rmse) << '\n';
  }
  if (both || args.metric == "pm_rmse") {
    std::cout << "pm_rmse=" << FormatDouble(report.pm_rmse) << '\n';
  }
  std::cout << "games=" << report.games
            << " player_months=" << report.player_months << '\n';
}

void RunTune(const TuneArgs& args) {
  const LoadedGames loaded =
      LoadGames(args.games, /*require_outcomes=*/true, Columns(args.columns));
  Hyperparams base;
  base.iterations = args.iterations;
  base.seed = args.seed;
  const TuneResult result =
      GridTune(loaded.dataset, args.gammas, args.lambdas, base,
               args.tail_months, ParseMetric(args.metric), args.jobs);
  if (!args.out_grid.empty()) {
    std::ofstream out = OpenOut(args.out_grid);
    out << "gamma,lambda," << MetricName(result.metric) << '\n';
    for (const GridPoint& point : result.grid) {
      out << FormatDouble(point.gamma) << ',' << FormatDouble(point.lambda)
          << ',' << FormatDouble(point.metric) << '\n';
    }
    if (!out.flush()) throw IoError("failed writing '" + args.out_grid + "'");
  }
  std::cout << "best_gamma=" << FormatDouble(result.best_gamma)
            << " best_lambda=" << FormatDouble(result.best_lambda) << ' '
            << MetricName(result.metric) << '='
            << FormatDouble(result.best_metric) << '\n';
}

void RunNormalize(const NormalizeArgs& args) {
  NormalizationParams params;
  params.scale = args.scale;
  params.offset = args.offset;
  params.match_mean = args.match_mean;
  SaveRatings(args.out, ToEloScale(LoadRatings(args.ratings), params),
              kEloRatingColumn);
}

void RunExport(const ExportArgs& args) {
  if (args.histogram == args.scatter) {
    throw UsageError("exactly one of --histogram or --scatter is required");
  }
  if (args.scatter && args.ratings_b.empty()) {
    throw UsageError("--scatter requires --ratings-b");
  }
  const RatingTable ratings = LoadRatings(args.ratings);
  std::ofstream out = OpenOut(args.out);
  if (args.histogram) {
    out << "bucket_lower,count\n";
    for (const HistogramBucket& b :
         ExportHistogram(ratings, args.bucket_width)) {
      out << FormatDouble(b.lower) << ',' << b.count << '\n';
    }
  } else {
    out << "player,a,b\n";
    for (const ScatterRow& row :
         ExportScatter(ratings, LoadRatings(args.ratings_b))) {
      out << row.player.value << ',' << FormatDouble(row.a) << ','
          << FormatDouble(row.b) << '\n';
    }
  }
  if (!out.flush()) throw IoError("failed writing '" + args.out + "'");
}

void RunSynth(const SynthArgs& args) {
  const SynthResult result = Generate(args.config);
  SaveGames(args.out_games, result.dataset);
  if (!args.out_latent.empty()) SaveRatings(args.out_latent, result.latent);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elo++ rating engine"};
  app.require_subcommand(1);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train ratings from games");
  train_cmd->add_option("--games", train.games, "Games CSV with scores")
      ->required();
  train_cmd->add_option("--out-ratings", train.out_ratings, "Ratings CSV")
      ->required();
  train_cmd->add_option("--columns", train.columns,
                        "Column remapping, e.g. month=Month,white=W");
  train_cmd->add_option("--gamma", train.hyper.gamma, "White advantage")
      ->capture_default_str();
  train_cmd->add_option("--lambda", train.hyper.lambda, "Regularization")
      ->capture_default_str();
  train_cmd->add_option("--iterations", train.hyper.iterations, "Epochs")
      ->capture_default_str();
  train_cmd->add_option("--seed", train.hyper.seed, "Shuffle seed")
      ->capture_default_str();
  train_cmd->add_flag("--early-out", train.early_out,
                      "Stop when validation loss keeps rising");
  train_cmd->add_option("--validation-fraction", train.validation_fraction,
                        "Share of latest games held out for early-out")
      ->capture_default_str();
  train_cmd->add_option("--patience", train.patience,
                        "Consecutive increases before stopping")
      ->capture_default_str();
  train_cmd->add_flag("--report-loss", train.report_loss,
                      "Print the per-epoch loss table");

  PredictArgs predict;
  auto* predict_cmd =
      app.add_subcommand("predict", "Predict expected white scores");
  predict_cmd->add_option("--games", predict.games, "Games CSV")->required();
  predict_cmd->add_option("--ratings", predict.ratings, "Ratings CSV")
      ->required();
  predict_cmd->add_option("--gamma", predict.gamma, "White advantage")
      ->capture_default_str();
  predict_cmd->add_option("--out-predictions", predict.out,
                          "Output CSV (stdout if omitted)");
  predict_cmd->add_option("--columns", predict.columns, "Column remapping");

  EvaluateArgs evaluate;
  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "Score ratings or predictions");
  evaluate_cmd->add_option("--games", evaluate.games, "Games CSV with scores")
      ->required();
  evaluate_cmd->add_option("--ratings", evaluate.ratings, "Ratings CSV");
  evaluate_cmd->add_option("--predictions", evaluate.predictions,
                           "Predictions CSV");
  evaluate_cmd->add_option("--gamma", evaluate.gamma, "White advantage")
      ->capture_default_str();
  evaluate_cmd->add_option("--metric", evaluate.metric, "rmse|pm_rmse|both")
      ->check(CLI::IsMember({"rmse", "pm_rmse", "both"}))
      ->capture_default_str();
  evaluate_cmd->add_option("--columns", evaluate.columns, "Column remapping");

  TuneArgs tune;
  auto* tune_cmd =
      app.add_subcommand("tune", "Grid-search gamma and lambda");
  tune_cmd->add_option("--games", tune.games, "Games CSV with scores")
      ->required();
  tune_cmd->add_option("--gammas", tune.gammas, "Comma-separated gammas")
      ->delimiter(',');
  tune_cmd->add_option("--lambdas", tune.lambdas, "Comma-separated lambdas")
      ->delimiter(',');
  tune_cmd->add_option("--tail-months", tune.tail_months,
                       "Months held out at the end")
      ->capture_default_str();
  tune_cmd->add_option("--metric", tune.metric, "rmse|pm_rmse")
      ->check(CLI::IsMember({"rmse", "pm_rmse"}))
      ->capture_default_str();
  tune_cmd->add_option("--out-grid", tune.out_grid, "Grid CSV");
  tune_cmd->add_option("--iterations", tune.iterations, "Epochs per fit")
      ->capture_default_str();
  tune_cmd->add_option("--seed", tune.seed, "Shuffle seed")
      ->capture_default_str();
  tune_cmd->add_option("--jobs", tune.jobs, "Grid points trained in parallel")
      ->capture_default_str();
  tune_cmd->add_option("--columns", tune.columns, "Column remapping");

  NormalizeArgs normalize;
  auto* normalize_cmd =
      app.add_subcommand("normalize", "Map ratings onto the Elo scale");
  normalize_cmd->add_option("--ratings", normalize.ratings, "Ratings CSV")
      ->required();
  normalize_cmd->add_option("--out", normalize.out, "Output CSV")->required();
  normalize_cmd->add_option("--scale", normalize.scale, "Multiplier")
      ->capture_default_str();
  auto* offset_opt =
      normalize_cmd->add_option("--offset", normalize.offset, "Additive shift")
          ->capture_default_str();
  normalize_cmd
      ->add_option("--match-mean", normalize.match_mean,
                   "Choose the offset so the output mean equals this")
      ->excludes(offset_opt);

  ExportArgs exp;
  auto* export_cmd =
      app.add_subcommand("export", "Histogram or scatter data for plotting");
  export_cmd->add_option("--ratings", exp.ratings, "Ratings CSV")->required();
  export_cmd->add_option("--ratings-b", exp.ratings_b,
                         "Second ratings CSV for --scatter");
  export_cmd->add_flag("--histogram", exp.histogram, "Bucket counts");
  export_cmd->add_flag("--scatter", exp.scatter, "Paired ratings");
  export_cmd->add_option("--bucket-width", exp.bucket_width, "Bucket width")
      ->capture_default_str();
  export_cmd->add_option("--out", exp.out, "Output CSV")->required();

  SynthArgs synth;
  auto* synth_cmd =
      app.add_subcommand("synth", "Generate games from latent ratings");
  synth_cmd->add_option("--players", synth.config.players)
      ->capture_default_str();
  synth_cmd->add_option("--games", synth.config.games)->capture_default_str();
  synth_cmd->add_option("--months", synth.config.months)
      ->capture_default_str();
  synth_cmd->add_option("--gamma-true", synth.config.gamma_true)
      ->capture_default_str();
  synth_cmd->add_option("--draw-fraction", synth.config.draw_fraction)
      ->capture_default_str();
  synth_cmd->add_option("--spread", synth.config.latent_spread)
      ->capture_default_str();
  synth_cmd->add_option("--locality", synth.config.tournament_locality)
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth.config.seed)->capture_default_str();
  synth_cmd->add_option("--out-games", synth.out_games, "Games CSV")
      ->required();
  synth_cmd->add_option("--out-latent", synth.out_latent,
                        "Latent ratings CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*train_cmd) RunTrain(train);
    if (*predict_cmd) RunPredict(predict);
    if (*evaluate_cmd) RunEvaluate(evaluate);
    if (*tune_cmd) RunTune(tune);
    if (*normalize_cmd) RunNormalize(normalize);
    if (*export_cmd) RunExport(exp);
    if (*synth_cmd) RunSynth(synth);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
