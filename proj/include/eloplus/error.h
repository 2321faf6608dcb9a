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

#ifndef ELOPLUS_ERROR_H_
#define ELOPLUS_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eloplus {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller passed a value outside the operation's domain (non-finite
// rating, empty dataset, bad hyperparameter).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// An integer argument fell outside its permitted interval.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Inputs disagree with each other, e.g. a game references a player that has
// no rating.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a data invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `line()` is 1-based and counts the header.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Training produced a non-finite loss or a runaway rating.
class DivergenceError : public Error {
 public:
  DivergenceError(int epoch, const std::string& what)
      : Error("training diverged at epoch " + std::to_string(epoch) + ": " +
              what),
        epoch_(epoch) {}

  int epoch() const { return epoch_; }

 private:
  int epoch_;
};

}  // namespace eloplus

#endif  // ELOPLUS_ERROR_H_
