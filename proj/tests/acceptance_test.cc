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

// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eloplus/core.h"
#include "eloplus/csv_io.h"
#include "eloplus/eval.h"
#include "eloplus/normalize.h"
#include "eloplus/rng.h"
#include "eloplus/synth.h"
#include "eloplus/trainer.h"

namespace {

using namespace eloplus;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(double v) { return FormatDouble(v); }

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// 200 players, 20,000 games, 100 months, seed 1.
const SynthResult& AcceptanceData() {
  static const SynthResult data = [] {
    SynthConfig config;
    config.players = 200;
    config.games = 20000;
    config.months = 100;
    config.seed = 1;
    return Generate(config);
  }();
  return data;
}

Hyperparams WithLambda(double lambda) {
  Hyperparams h;
  h.lambda = lambda;
  return h;
}

const TrainReport& DefaultRun() {
  static const TrainReport report = Train(AcceptanceData().dataset, {});
  return report;
}

double StdDev(const RatingTable& ratings) {
  double sum = 0;
  for (const auto& [id, r] : ratings) sum += r;
  const double mean = sum / static_cast<double>(ratings.size());
  double sq = 0;
  for (const auto& [id, r] : ratings) sq += (r - mean) * (r - mean);
  return std::sqrt(sq / static_cast<double>(ratings.size()));
}

int RunCli(const std::string& args) {
  const std::string command =
      std::string(ELOPLUS_CLI_PATH) + " " + args + " > /dev/null";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path WorkDir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "eloplus_acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Outcome FormulaFidelity() {
  // mpmath, 40 digits: (6/55)^0.602.
  constexpr double kOracle = 0.26348064241112859249;
  const double first = LearningRate(1, 50);
  const double last = LearningRate(50, 50);
  return {first == 1.0 && std::abs(last - kOracle) <= 1e-12,
          "eta(1,50)=" + Fmt(first) + " eta(50,50)=" + Fmt(last)};
}

Outcome GradientCorrectness() {
  Rng rng(2010);
  int exact = 0;
  int fd_ok = 0;
  double worst = 0;
  constexpr int kTuples = 1000;
  constexpr double kStep = 1e-6;
  for (int i = 0; i < kTuples; ++i) {
    TupleState s;
    s.r_white = 4 * rng.NextDouble() - 2;
    s.r_black = 4 * rng.NextDouble() - 2;
    s.a_white = 4 * rng.NextDouble() - 2;
    s.a_black = 4 * rng.NextDouble() - 2;
    s.n_white = 1 + rng.NextBelow(50);
    s.n_black = 1 + rng.NextBelow(50);
    s.weight = 0.0001 + 0.9999 * rng.NextDouble();
    s.outcome = 0.5 * static_cast<double>(rng.NextBelow(3));
    const double gamma = rng.NextDouble() - 0.5;
    const double lambda = 2 * rng.NextDouble();
    const double eta = 0.1 + 0.9 * rng.NextDouble();

    // Printed update lines, transcribed.
    const double oh = 1.0 / (1.0 + std::exp(s.r_black - s.r_white - gamma));
    const double g = s.weight * (oh - s.outcome) * oh * (1.0 - oh);
    const double ri = s.r_white - eta * (g + lambda / static_cast<double>(
                                                 s.n_white) *
                                                 (s.r_white - s.a_white));
    const double rj = s.r_black - eta * (-g + lambda / static_cast<double>(
                                                  s.n_black) *
                                                  (s.r_black - s.a_black));
    const auto [w, b] = UpdatedRatings(s, gamma, lambda, eta);
    if (w == ri && b == rj) ++exact;

    // Frozen-average per-tuple objective whose gradient is the printed
    // bracket.
    auto f = [&](double rw, double rb) {
      const double o = 1.0 / (1.0 + std::exp(rb - rw - gamma));
      return 0.5 * s.weight * (o - s.outcome) * (o - s.outcome) +
             lambda / (2.0 * s.n_white) * (rw - s.a_white) * (rw - s.a_white) +
             lambda / (2.0 * s.n_black) * (rb - s.a_black) * (rb - s.a_black);
    };
    const double gw = (f(s.r_white + kStep, s.r_black) -
                       f(s.r_white - kStep, s.r_black)) /
                      (2 * kStep);
    const double gb = (f(s.r_white, s.r_black + kStep) -
                       f(s.r_white, s.r_black - kStep)) /
                      (2 * kStep);
    auto rel = [](double got, double want) {
      return std::abs(got - want) / std::max(std::abs(want), 1e-8);
    };
    const double ew = rel(w - s.r_white, -eta * gw);
    const double eb = rel(b - s.r_black, -eta * gb);
    worst = std::max({worst, ew, eb});
    if (ew <= 1e-4 && eb <= 1e-4) ++fd_ok;
  }
  return {exact == kTuples && fd_ok == kTuples,
          std::to_string(exact) + "/1000 exact, " + std::to_string(fd_ok) +
              "/1000 within 1e-4 of finite differences (worst rel " +
              Fmt(worst) + ")"};
}

Outcome TranslationDegeneracy() {
  SynthConfig config;
  config.players = 30;
  config.games = 200;
  config.months = 10;
  config.seed = 5;
  const SynthResult small = Generate(config);
  const TrainingProblem problem(small.dataset);
  std::vector<double> ratings;
  for (const auto& [id, r] : small.latent) ratings.push_back(r);

  double worst_loss0 = 0;
  double worst_loss = 0;
  double worst_pred = 0;
  double worst_reg = 0;
  for (double c : {-2.3, 0.7, 5.0}) {
    std::vector<double> shifted = ratings;
    for (double& r : shifted) r += c;
    const auto a = problem.NeighborAveragesOf(ratings);
    const auto a_shift = problem.NeighborAveragesOf(shifted);
    auto loss = [&](const std::vector<double>& r, const std::vector<double>& av,
                    double lambda) {
      return TotalLoss(problem, r, av, 0.2, lambda);
    };
    worst_loss0 = std::max(
        worst_loss0, std::abs(loss(shifted, a_shift, 0) - loss(ratings, a, 0)));
    worst_loss =
        std::max(worst_loss, std::abs(loss(shifted, a_shift, 0.77) -
                                      loss(ratings, a, 0.77)));
    double reg = 0;
    double reg_shift = 0;
    for (std::size_t i = 0; i < ratings.size(); ++i) {
      reg += (ratings[i] - a[i]) * (ratings[i] - a[i]);
      reg_shift += (shifted[i] - a_shift[i]) * (shifted[i] - a_shift[i]);
    }
    worst_reg = std::max(worst_reg, std::abs(reg - reg_shift));
    for (const IndexedGame& g : problem.games()) {
      worst_pred = std::max(
          worst_pred,
          std::abs(PredictOutcome(shifted[g.white], shifted[g.black], 0.2) -
                   PredictOutcome(ratings[g.white], ratings[g.black], 0.2)));
    }
  }
  double mean = 0;
  for (const auto& [id, r] : DefaultRun().ratings) mean += r;
  mean /= static_cast<double>(DefaultRun().ratings.size());
  const bool pass = worst_loss0 <= 1e-12 && worst_pred <= 1e-12 &&
                    worst_reg <= 1e-12 && worst_loss <= 1e-12 &&
                    std::abs(mean) <= 0.05;
  return {pass, "loss(l=0) drift " + Fmt(worst_loss0) + ", loss(l=0.77) " +
                    Fmt(worst_loss) + ", prediction " + Fmt(worst_pred) +
                    ", regularizer " + Fmt(worst_reg) +
                    ", trained mean rating " + Fmt(mean)};
}

Outcome ConvergenceTrend() {
  const auto start = std::chrono::steady_clock::now();
  const TrainReport report = Train(AcceptanceData().dataset, {});
  const double seconds = Seconds(start);
  const auto& l = report.loss;
  const double drift = std::abs(l[50] - l[25]) / l[25];
  return {l[5] < l[0] && drift <= 0.02 && seconds < 60.0,
          "loss0=" + Fmt(l[0]) + " loss5=" + Fmt(l[5]) + " loss25=" +
              Fmt(l[25]) + " loss50=" + Fmt(l[50]) + " rel drift " +
              Fmt(drift) + ", " + Fmt(seconds) + " s"};
}

Outcome SkillRecovery() {
  const double rho =
      SpearmanCorrelation(DefaultRun().ratings, AcceptanceData().latent);
  const double baseline = SpearmanCorrelation(
      EloBaseline(AcceptanceData().dataset), AcceptanceData().latent);
  std::cout << "[INFO] classic Elo baseline Spearman " << Fmt(baseline)
            << (rho >= baseline ? " <= " : " > ") << "Elo++ " << Fmt(rho)
            << '\n';
  return {rho >= 0.9, "Spearman " + Fmt(rho)};
}

Outcome RegularizationPull() {
  const double s0 = StdDev(Train(AcceptanceData().dataset, WithLambda(0)).ratings);
  const double s1 =
      StdDev(Train(AcceptanceData().dataset, WithLambda(0.77)).ratings);
  const double s2 =
      StdDev(Train(AcceptanceData().dataset, WithLambda(10)).ratings);
  return {s0 > s1 && s1 > s2, "std(l=0)=" + Fmt(s0) + " std(l=0.77)=" +
                                  Fmt(s1) + " std(l=10)=" + Fmt(s2)};
}

Outcome TuningSanity() {
  const TuneResult r =
      GridTune(AcceptanceData().dataset, kDefaultGammaGrid, kDefaultLambdaGrid,
               Hyperparams{}, kDefaultTailMonths, Metric::kRmse);
  return {std::abs(r.best_gamma - 0.2) <= 0.1 + 1e-12,
          "best gamma=" + Fmt(r.best_gamma) + " lambda=" +
              Fmt(r.best_lambda) + " rmse=" + Fmt(r.best_metric)};
}

Outcome NormalizationConstants() {
  const double advantage = ScaledAdvantage(0.2);
  return {std::abs(kEloScale - 173.717792761) <= 1e-9 &&
              std::abs(advantage - 34.74) <= 0.01,
          "scale=" + Fmt(kEloScale) + " advantage(0.2)=" + Fmt(advantage)};
}

Outcome Determinism() {
  const fs::path dir = WorkDir();
  SaveGames(dir / "det_games.csv", AcceptanceData().dataset);
  const std::string train =
      "train --games " + (dir / "det_games.csv").string() + " --seed 1";
  const int a = RunCli(train + " --out-ratings " + (dir / "det_a.csv").string());
  const int b = RunCli(train + " --out-ratings " + (dir / "det_b.csv").string());
  const std::string fa = Slurp(dir / "det_a.csv");
  const std::string fb = Slurp(dir / "det_b.csv");
  return {a == 0 && b == 0 && !fa.empty() && fa == fb,
          "exit codes " + std::to_string(a) + "/" + std::to_string(b) + ", " +
              std::to_string(fa.size()) + " bytes, identical=" +
              (fa == fb ? "yes" : "no")};
}

Outcome MetricAgreement() {
  Rng rng(77);
  double worst = 0;
  for (int trial = 0; trial < 10; ++trial) {
    PredictionSet set;
    const int months = 1 + static_cast<int>(rng.NextBelow(6));
    for (int m = 1; m <= months; ++m) {
      // Disjoint pairs within a month: every player-month group has one game.
      std::vector<std::uint64_t> ids(12);
      for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i + 1;
      Shuffle(std::span<std::uint64_t>(ids), rng);
      const int pairs = 1 + static_cast<int>(rng.NextBelow(6));
      for (int p = 0; p < pairs; ++p) {
        const double o = 0.5 * static_cast<double>(rng.NextBelow(3));
        set.push_back({{PlayerId{ids[2 * p]}, PlayerId{ids[2 * p + 1]}, m, o},
                       0.02 + 0.96 * rng.NextDouble()});
      }
    }
    worst = std::max(worst, std::abs(Rmse(set) - PmRmse(set)));
  }
  return {worst <= 1e-12, "max |rmse - pm_rmse| = " + Fmt(worst)};
}

Outcome ScaleCheck() {
  const fs::path dir = WorkDir();
  const std::string games = (dir / "scale_games.csv").string();
  if (RunCli("synth --players 8000 --games 73000 --months 100 --seed 1 "
             "--out-games " + games) != 0) {
    return {false, "synth failed"};
  }
  const auto start = std::chrono::steady_clock::now();
  const int code = RunCli("train --iterations 50 --games " + games +
                          " --out-ratings " +
                          (dir / "scale_ratings.csv").string());
  const double seconds = Seconds(start);
  return {code == 0 && seconds < 300.0,
          "73000 games, P=50 train in " + Fmt(seconds) + " s"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>>
      criteria = {
          {"1 formula fidelity", FormulaFidelity},
          {"2 gradient correctness", GradientCorrectness},
          {"3 translation degeneracy", TranslationDegeneracy},
          {"4 convergence trend", ConvergenceTrend},
          {"5 skill recovery", SkillRecovery},
          {"6 regularization pull", RegularizationPull},
          {"7 tuning sanity", TuningSanity},
          {"8 normalization constants", NormalizationConstants},
          {"9 determinism", Determinism},
          {"10 metric agreement", MetricAgreement},
          {"11 scale check", ScaleCheck},
      };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << ": "
              << outcome.detail << std::endl;
  }
  std::filesystem::remove_all(WorkDir());
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
