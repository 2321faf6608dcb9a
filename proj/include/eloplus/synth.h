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

#ifndef ELOPLUS_SYNTH_H_
#define ELOPLUS_SYNTH_H_

#include <cstdint>
#include <span>

#include "eloplus/core.h"

namespace eloplus {

struct SynthConfig {
  int players = 200;
  int games = 20000;
  int months = 100;
  double gamma_true = 0.2;
  // Draw probability between equals; d = draw_fraction * 4p(1 - p).
  double draw_fraction = 0.3;
  // Standard deviation of the latent natural-scale ratings.
  double latent_spread = 1.0;
  // Opponent acceptance decays as exp(-locality * |r_white - r_black|);
  // 0 pairs uniformly.
  double tournament_locality = 1.0;
  std::uint64_t seed = 1;

  // Throws ValidationError on a configuration that cannot be sampled.
  void Validate() const;
};

struct SynthResult {
  Dataset dataset;      // sorted by month, ids 1..players
  RatingTable latent;   // ground truth, natural scale
};

// Samples games whose expected white score is logistic(r_w - r_b + gamma).
// Draws occur with probability d = draw_fraction * 4p(1 - p); otherwise white
// wins with probability (p - d/2) / (1 - d), clamped to [0, 1], which keeps
// E[outcome] = p.
SynthResult Generate(const SynthConfig& config);

inline constexpr double kDefaultKFactor = 32.0;
inline constexpr double kBaselineStart = 1500.0;

// Classic sequential Elo on the 400-point base-10 curve, games processed in
// month order (ties keep input order). Only a comparison baseline.
RatingTable EloBaseline(const Dataset& dataset,
                        double k_factor = kDefaultKFactor,
                        double start = kBaselineStart);

// Spearman rank correlation with average ranks for ties.
double SpearmanCorrelation(std::span<const double> x,
                           std::span<const double> y);

// Spearman correlation over players rated in both tables.
double SpearmanCorrelation(const RatingTable& a, const RatingTable& b);

}  // namespace eloplus

#endif  // ELOPLUS_SYNTH_H_
