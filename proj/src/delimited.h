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

// Minimal RFC 4180 style reader/writer shared by the CSV and TSV paths:
// double-quoted fields may hold delimiters, quotes ("") and line breaks.

#ifndef NAIJASENT_SRC_DELIMITED_H_
#define NAIJASENT_SRC_DELIMITED_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace naijasent::delimited {

class Reader {
 public:
  Reader(std::string_view data, char delimiter)
      : data_(data), delimiter_(delimiter) {}

  // Reads the next record into `fields`. Returns false at end of input.
  // Throws std::runtime_error on an unterminated or malformed quoted field.
  bool next(std::vector<std::string>& fields);

  // 1-based physical line on which the last record started.
  std::size_t line() const { return record_line_; }

 private:
  std::string_view data_;
  char delimiter_;
  std::size_t pos_ = 0;
  std::size_t current_line_ = 1;
  std::size_t record_line_ = 0;
};

// Quotes the field only when it contains the delimiter, a quote or a line
// break.
std::string quote(std::string_view field, char delimiter);

}  // namespace naijasent::delimited

#endif  // NAIJASENT_SRC_DELIMITED_H_
