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

#ifndef ELOPLUS_CSV_IO_H_
#define ELOPLUS_CSV_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eloplus/core.h"
#include "eloplus/eval.h"

namespace eloplus {

// Maps the canonical games columns onto header names of the input file.
struct ColumnMap {
  std::string month = "month";
  std::string white = "white";
  std::string black = "black";
  std::string score = "score";

  // Parses "month=Month,white=White,..."; unspecified columns keep their
  // canonical names. Throws InvalidArgumentError on unknown keys.
  static ColumnMap Parse(std::string_view spec);
};

struct LoadedGames {
  Dataset dataset;
  DatasetIndex index;
};

// Reads a games CSV (header `month,white,black,score`, columns in any order,
// extra columns ignored). The score column may be absent or empty unless
// `require_outcomes`. Throws ParseError naming the line for malformed rows
// and ValidationError for well-formed rows that break a game invariant.
Dataset ReadGames(std::istream& in, bool require_outcomes,
                  const ColumnMap& columns = {},
                  std::string_view source = "<games>");
LoadedGames LoadGames(const std::filesystem::path& path,
                      bool require_outcomes, const ColumnMap& columns = {});

// Writes the canonical header and one row per game; missing outcomes are
// written as an empty field.
void WriteGames(std::ostream& out, const Dataset& dataset);
void SaveGames(const std::filesystem::path& path, const Dataset& dataset);

inline constexpr std::string_view kNaturalRatingColumn = "rating";
inline constexpr std::string_view kEloRatingColumn = "rating_elo";

// `player,<column>` rows in id order, 17 significant digits.
void WriteRatings(std::ostream& out, const RatingTable& ratings,
                  std::string_view column = kNaturalRatingColumn);
void SaveRatings(const std::filesystem::path& path, const RatingTable& ratings,
                 std::string_view column = kNaturalRatingColumn);

// Accepts either rating column name. Throws ValidationError on duplicate
// players or non-finite ratings.
RatingTable ReadRatings(std::istream& in,
                        std::string_view source = "<ratings>");
RatingTable LoadRatings(const std::filesystem::path& path);

// `month,white,black,expected_score`, one row per prediction in order.
void WritePredictions(std::ostream& out, const PredictionSet& predictions);
void SavePredictions(const std::filesystem::path& path,
                     const PredictionSet& predictions);
// Predictions come back without outcomes.
PredictionSet ReadPredictions(std::istream& in,
                              std::string_view source = "<predictions>");
PredictionSet LoadPredictions(const std::filesystem::path& path);

// %.17g-style text, which reads back to the same double; '.' is the decimal
// separator regardless of locale.
std::string FormatDouble(double value);

}  // namespace eloplus

#endif  // ELOPLUS_CSV_IO_H_
