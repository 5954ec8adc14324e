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

#ifndef NAIJASENT_DERIVATION_H_
#define NAIJASENT_DERIVATION_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "naijasent/lexicon.h"

namespace naijasent {

struct SourceValence {
  std::string token;
  double valence = 0.0;

  friend bool operator==(const SourceValence&, const SourceValence&) = default;
};

// A Pidgin token whose valence is the mean of the valences of the English
// words it translates to.
struct DerivationRecord {
  std::string pidgin_token;
  std::vector<SourceValence> sources;
  double derived_valence = 0.0;
};

// The mean is kept at full precision; rounding is for display only.
// Throws DerivationError on an empty source list or an out-of-range valence.
DerivationRecord derive_entry(std::string_view pidgin_token,
                              std::vector<SourceValence> sources);

// Derived entries carry no rating distribution (dispersion 0).
LexiconEntry to_entry(const DerivationRecord& record);

// One-decimal rendering used in reports, e.g. -2.1667 -> "-2.2".
std::string display_valence(double valence);

bool has_mixed_signs(const DerivationRecord& record);

// One line of a mapping file:
//
//   pidgin<TAB>english1,english2(-2.0),...[<TAB>published average]
//
// A source written as `word(v)` carries its own valence; a bare word is
// looked up in the source lexicon. The optional third column is an average
// reported elsewhere, checked by lint_derivation().
struct MappingSource {
  std::string token;
  std::optional<double> valence;
};

struct MappingLine {
  std::size_t line = 0;
  std::string pidgin_token;
  std::vector<MappingSource> sources;
  std::optional<double> published_average;
};

// Throws DerivationError (with the line number) on malformed lines and on a
// Pidgin token that appears twice.
std::vector<MappingLine> parse_mapping(std::istream& in);
std::vector<MappingLine> parse_mapping_file(const std::filesystem::path& path);

struct DerivationIssue {
  enum class Kind {
    kMixedSigns,         // sources disagree in sign
    kPublishedMismatch,  // computed mean differs from the published average
  };
  Kind kind;
  std::string pidgin_token;
  std::string message;
};

// A published average "agrees" when it is the one-decimal rounding of the
// computed mean, i.e. they differ by at most 0.05.
std::vector<DerivationIssue> lint_derivation(
    const DerivationRecord& record,
    std::optional<double> published_average = std::nullopt);

struct DerivationOutcome {
  std::vector<DerivationRecord> records;  // mapping order
  std::vector<DerivationIssue> issues;
  // Sources that were neither given inline nor found in the lexicon, as
  // "pidgin:english" pairs. When non-empty, `records` is empty.
  std::vector<std::string> unresolved;
};

// `source` may be null when every mapping source carries its own valence.
DerivationOutcome derive_from_mapping(const std::vector<MappingLine>& mapping,
                                      const Lexicon* source);

// Builds the augmentation lexicon from derived records.
Lexicon to_lexicon(const std::vector<DerivationRecord>& records,
                   std::string name);

}  // namespace naijasent

#endif  // NAIJASENT_DERIVATION_H_
