// Copyright 2026 The naijasent Authors.
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

#ifndef NAIJASENT_ERROR_H_
#define NAIJASENT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace naijasent {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be opened, read, written or renamed.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed lexicon content. line() is 1-based, 0 when not tied to a line.
class LexiconError : public Error {
 public:
  LexiconError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DerivationError : public Error {
 public:
  using Error::Error;
};

// Raised by merge() under MergePolicy::kErrorOnConflict.
class MergeConflictError : public Error {
 public:
  explicit MergeConflictError(std::vector<std::string> tokens)
      : Error(Describe(tokens)), tokens_(std::move(tokens)) {}
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  static std::string Describe(const std::vector<std::string>& tokens) {
    std::string msg = "conflicting tokens:";
    for (const auto& t : tokens) msg += " " + t;
    return msg;
  }
  std::vector<std::string> tokens_;
};

// Malformed corpus record. row() is the 1-based data record number
// (header excluded), 0 for header-level problems.
class CorpusError : public Error {
 public:
  CorpusError(const std::string& message, std::size_t row = 0)
      : Error(row == 0 ? message
                       : "row " + std::to_string(row) + ": " + message),
        row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace naijasent

#endif  // NAIJASENT_ERROR_H_
