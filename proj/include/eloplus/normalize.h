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

#ifndef ELOPLUS_NORMALIZE_H_
#define ELOPLUS_NORMALIZE_H_

#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

#include "eloplus/core.h"

namespace eloplus {

// 400 * log10(e). Multiplying a natural-log logistic rating by this factor
// puts it on the base-10, 400-point Elo curve.
inline constexpr double kEloScale = 400.0 * std::numbers::log10e;

// Offset that matched the Elo++ mean to the published Elo list on the
// competition data. It is specific to that dataset; prefer match_mean
// elsewhere.
inline constexpr double kDefaultEloOffset = 2338.0;

inline constexpr double kDefaultBucketWidth = 50.0;

struct NormalizationParams {
  double scale = kEloScale;
  double offset = kDefaultEloOffset;
  // When set, `offset` is ignored and chosen so the output mean equals this.
  std::optional<double> match_mean;
};

// r -> scale * r + offset. Throws InvalidArgumentError if scale <= 0 or a
// rating is non-finite.
RatingTable ToEloScale(const RatingTable& ratings,
                       const NormalizationParams& params = {});

// gamma expressed in Elo points.
inline double ScaledAdvantage(double gamma, double scale = kEloScale) {
  return scale * gamma;
}

struct HistogramBucket {
  double lower = 0.0;
  std::size_t count = 0;
};

// Buckets [k * width, (k + 1) * width) from the lowest to the highest
// occupied bucket, empty ones included. Throws RangeError on width <= 0.
std::vector<HistogramBucket> ExportHistogram(const RatingTable& ratings,
                                             double bucket_width);

struct ScatterRow {
  PlayerId player;
  double a = 0.0;
  double b = 0.0;
};

// One row per player rated in both tables, by increasing id.
std::vector<ScatterRow> ExportScatter(const RatingTable& a,
                                      const RatingTable& b);

}  // namespace eloplus

#endif  // ELOPLUS_NORMALIZE_H_
