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

#include "eloplus/normalize.h"

#include <cmath>
#include <cstdint>

#include "eloplus/error.h"

namespace eloplus {

RatingTable ToEloScale(const RatingTable& ratings,
                       const NormalizationParams& params) {
  if (!(params.scale > 0.0) || !std::isfinite(params.scale)) {
    throw InvalidArgumentError("scale must be positive and finite");
  }
  double offset = params.offset;
  if (params.match_mean.has_value() && !ratings.empty()) {
    double sum = 0.0;
    for (const auto& [id, r] : ratings) sum += r;
    const double mean = sum / static_cast<double>(ratings.size());
    offset = *params.match_mean - params.scale * mean;
  }
  RatingTable out;
  for (const auto& [id, r] : ratings) {
    if (!std::isfinite(r)) {
      throw InvalidArgumentError("rating of player " +
                                 std::to_string(id.value) + " is not finite");
    }
    out.emplace_hint(out.end(), id, params.scale * r + offset);
  }
  return out;
}

std::vector<HistogramBucket> ExportHistogram(const RatingTable& ratings,
                                             double bucket_width) {
  if (!(bucket_width > 0.0) || !std::isfinite(bucket_width)) {
    throw RangeError("bucket width must be positive");
  }
  if (ratings.empty()) return {};
  std::map<std::int64_t, std::size_t> counts;
  for (const auto& [id, r] : ratings) {
    ++counts[static_cast<std::int64_t>(std::floor(r / bucket_width))];
  }
  std::vector<HistogramBucket> buckets;
  const std::int64_t first = counts.begin()->first;
  const std::int64_t last = counts.rbegin()->first;
  for (std::int64_t k = first; k <= last; ++k) {
    auto it = counts.find(k);
    buckets.push_back({static_cast<double>(k) * bucket_width,
                       it == counts.end() ? 0 : it->second});
  }
  return buckets;
}

std::vector<ScatterRow> ExportScatter(const RatingTable& a,
                                      const RatingTable& b) {
  std::vector<ScatterRow> rows;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      rows.push_back({ia->first, ia->second, ib->second});
      ++ia;
      ++ib;
    }
  }
  return rows;
}

}  // namespace eloplus
