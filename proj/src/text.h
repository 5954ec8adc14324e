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

// Byte-level text helpers shared by the parsers and the tokenizer. Case
// handling is ASCII-only; other code points are treated as uncased.

#ifndef NAIJASENT_SRC_TEXT_H_
#define NAIJASENT_SRC_TEXT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace naijasent::text {

std::string ascii_lower(std::string_view s);

inline bool is_ascii_punct(unsigned char c) {
  return (c >= 33 && c <= 47) || (c >= 58 && c <= 64) ||
         (c >= 91 && c <= 96) || (c >= 123 && c <= 126);
}

// True when the string has at least one cased character and none of its
// cased characters is lowercase.
bool is_all_caps(std::string_view s);

// Number of UTF-8 code points; stray continuation bytes count as one each.
std::size_t codepoint_count(std::string_view s);

// Splits on runs of Unicode whitespace (ASCII whitespace, the 0x1C-0x1F
// separators, NEL, NBSP and the Unicode space separators).
std::vector<std::string_view> split_whitespace(std::string_view s);

std::string_view trim(std::string_view s);

// Strict decimal parse of the whole view (leading '+' allowed). Rejects
// NaN and infinities.
std::optional<double> parse_double(std::string_view s);

// Fixed-point rendering; "-0.00" style negative zeros print unsigned.
std::string format_fixed(double value, int decimals);

}  // namespace naijasent::text

#endif  // NAIJASENT_SRC_TEXT_H_
