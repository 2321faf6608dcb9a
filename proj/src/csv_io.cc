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

#include "eloplus/csv_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <system_error>

#include "eloplus/error.h"

namespace eloplus {
namespace {

std::string_view Trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\"";
  const auto begin = s.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(kSpace);
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
std::optional<T> ParseNumber(std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void CheckWritten(std::ostream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

// Header column lookup for one file.
class Header {
 public:
  Header(std::string_view line, std::string source)
      : source_(std::move(source)) {
    for (std::string_view f : SplitFields(line)) names_.emplace_back(f);
  }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::size_t require(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw ParseError(source_, 1,
                     "missing column '" + std::string(name) + "'");
  }

  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::string source_;
};

std::string FormatScore(double score) {
  if (score == 0.5) return "0.5";
  return score == 1.0 ? "1" : "0";
}

// Reads the header line; throws ParseError on an empty stream.
std::string ReadHeader(std::istream& in, const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(source, 1, "missing header");
  return line;
}

PlayerId ParsePlayer(std::string_view field, const std::string& source,
                     std::size_t line, std::string_view column) {
  const auto value = ParseNumber<std::uint64_t>(field);
  if (!value) {
    throw ParseError(source, line,
                     "bad " + std::string(column) + " id '" +
                         std::string(field) + "'");
  }
  return PlayerId{*value};
}

}  // namespace

ColumnMap ColumnMap::Parse(std::string_view spec) {
  ColumnMap map;
  for (std::string_view entry : SplitFields(spec)) {
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgumentError("column mapping '" + std::string(entry) +
                                 "' is not key=name");
    }
    const std::string_view key = Trim(entry.substr(0, eq));
    std::string name(Trim(entry.substr(eq + 1)));
    if (key == "month") {
      map.month = std::move(name);
    } else if (key == "white") {
      map.white = std::move(name);
    } else if (key == "black") {
      map.black = std::move(name);
    } else if (key == "score") {
      map.score = std::move(name);
    } else {
      throw InvalidArgumentError("unknown column key '" + std::string(key) +
                                 "'");
    }
  }
  return map;
}

Dataset ReadGames(std::istream& in, bool require_outcomes,
                  const ColumnMap& columns, std::string_view source_name) {
  const std::string source(source_name);
  const Header header(ReadHeader(in, source), source);
  const std::size_t month_col = header.require(columns.month);
  const std::size_t white_col = header.require(columns.white);
  const std::size_t black_col = header.require(columns.black);
  const std::optional<std::size_t> score_col =
      require_outcomes ? std::optional(header.require(columns.score))
                       : header.find(columns.score);

  Dataset dataset;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != header.size()) {
      throw ParseError(source, line_no,
                       "expected " + std::to_string(header.size()) +
                           " fields, got " + std::to_string(fields.size()));
    }
    GameRecord game;
    const auto month = ParseNumber<int>(fields[month_col]);
    if (!month || *month < 1) {
      throw ParseError(source, line_no,
                       "bad month '" + std::string(fields[month_col]) + "'");
    }
    game.month = *month;
    game.white = ParsePlayer(fields[white_col], source, line_no, "white");
    game.black = ParsePlayer(fields[black_col], source, line_no, "black");
    if (score_col && !fields[*score_col].empty()) {
      const auto score = ParseNumber<double>(fields[*score_col]);
      if (!score || !IsValidOutcome(*score)) {
        throw ParseError(source, line_no,
                         "score must be 0, 0.5 or 1, got '" +
                             std::string(fields[*score_col]) + "'");
      }
      game.outcome = *score;
    }
    try {
      ValidateGame(game, require_outcomes);
    } catch (const ValidationError& e) {
      throw ValidationError(source + ":" + std::to_string(line_no) + ": " +
                            e.what());
    }
    dataset.games.push_back(game);
  }
  return dataset;
}

LoadedGames LoadGames(const std::filesystem::path& path,
                      bool require_outcomes, const ColumnMap& columns) {
  std::ifstream in = OpenForRead(path);
  Dataset dataset = ReadGames(in, require_outcomes, columns, path.string());
  if (dataset.empty()) {
    throw ValidationError(path.string() + ": no games");
  }
  DatasetIndex index = DatasetIndex::Build(dataset);
  return {std::move(dataset), std::move(index)};
}

void WriteGames(std::ostream& out, const Dataset& dataset) {
  out << "month,white,black,score\n";
  for (const GameRecord& game : dataset.games) {
    out << game.month << ',' << game.white.value << ',' << game.black.value
        << ',';
    if (game.outcome) out << FormatScore(*game.outcome);
    out << '\n';
  }
}

void SaveGames(const std::filesystem::path& path, const Dataset& dataset) {
  std::ofstream out = OpenForWrite(path);
  WriteGames(out, dataset);
  CheckWritten(out, path);
}

std::string FormatDouble(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                 std::chars_format::general, 17);
  return std::string(buffer, ptr);
}

void WriteRatings(std::ostream& out, const RatingTable& ratings,
                  std::string_view column) {
  out << "player," << column << '\n';
  for (const auto& [id, r] : ratings) {
    out << id.value << ',' << FormatDouble(r) << '\n';
  }
}

void SaveRatings(const std::filesystem::path& path, const RatingTable& ratings,
                 std::string_view column) {
  std::ofstream out = OpenForWrite(path);
  WriteRatings(out, ratings, column);
  CheckWritten(out, path);
}

RatingTable ReadRatings(std::istream& in, std::string_view source_name) {
  const std::string source(source_name);
  const Header header(ReadHeader(in, source), source);
  const std::size_t player_col = header.require("player");
  std::optional<std::size_t> rating_col = header.find(kNaturalRatingColumn);
  if (!rating_col) rating_col = header.require(kEloRatingColumn);

  RatingTable ratings;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != header.size()) {
      throw ParseError(source, line_no, "wrong number of fields");
    }
    const PlayerId id =
        ParsePlayer(fields[player_col], source, line_no, "player");
    const auto rating = ParseNumber<double>(fields[*rating_col]);
    if (!rating) {
      throw ParseError(source, line_no,
                       "bad rating '" + std::string(fields[*rating_col]) +
                           "'");
    }
    if (!std::isfinite(*rating)) {
      throw ValidationError(source + ":" + std::to_string(line_no) +
                            ": rating is not finite");
    }
    if (!ratings.emplace(id, *rating).second) {
      throw ValidationError(source + ":" + std::to_string(line_no) +
                            ": duplicate player " + std::to_string(id.value));
    }
  }
  return ratings;
}

RatingTable LoadRatings(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  return ReadRatings(in, path.string());
}

void WritePredictions(std::ostream& out, const PredictionSet& predictions) {
  out << "month,white,black,expected_score\n";
  for (const Prediction& p : predictions) {
    out << p.game.month << ',' << p.game.white.value << ','
        << p.game.black.value << ',' << FormatDouble(p.expected) << '\n';
  }
}

void SavePredictions(const std::filesystem::path& path,
                     const PredictionSet& predictions) {
  std::ofstream out = OpenForWrite(path);
  WritePredictions(out, predictions);
  CheckWritten(out, path);
}

PredictionSet ReadPredictions(std::istream& in, std::string_view source_name) {
  const std::string source(source_name);
  const Header header(ReadHeader(in, source), source);
  const std::size_t month_col = header.require("month");
  const std::size_t white_col = header.require("white");
  const std::size_t black_col = header.require("black");
  const std::size_t expected_col = header.require("expected_score");

  PredictionSet predictions;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != header.size()) {
      throw ParseError(source, line_no, "wrong number of fields");
    }
    Prediction p;
    const auto month = ParseNumber<int>(fields[month_col]);
    const auto expected = ParseNumber<double>(fields[expected_col]);
    if (!month || *month < 1) throw ParseError(source, line_no, "bad month");
    if (!expected || !(*expected >= 0.0 && *expected <= 1.0)) {
      throw ParseError(source, line_no, "expected_score must be in [0, 1]");
    }
    p.game.month = *month;
    p.game.white = ParsePlayer(fields[white_col], source, line_no, "white");
    p.game.black = ParsePlayer(fields[black_col], source, line_no, "black");
    p.expected = *expected;
    predictions.push_back(p);
  }
  return predictions;
}

PredictionSet LoadPredictions(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  return ReadPredictions(in, path.string());
}

}  // namespace eloplus
