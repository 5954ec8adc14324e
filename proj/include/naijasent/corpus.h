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

#ifndef NAIJASENT_CORPUS_H_
#define NAIJASENT_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "naijasent/engine.h"
#include "naijasent/lexicon.h"

namespace naijasent {

enum class Label { kNegative = 0, kNeutral = 1, kPositive = 2 };

inline constexpr std::size_t kLabelCount = 3;
inline constexpr Label kAllLabels[kLabelCount] = {
    Label::kNegative, Label::kNeutral, Label::kPositive};

std::string_view to_string(Label label);
// Case-insensitive; surrounding whitespace ignored.
std::optional<Label> parse_label(std::string_view text);

struct LabeledDocument {
  std::string id;
  std::string text;
  std::optional<Label> gold;

  friend bool operator==(const LabeledDocument&,
                         const LabeledDocument&) = default;
};

enum class CorpusFormat { kCsv, kTsv, kJsonl };

CorpusFormat parse_corpus_format(std::string_view name);
// Guesses from the extension (.csv, .tsv/.tab, .jsonl/.ndjson).
std::optional<CorpusFormat> corpus_format_for(const std::filesystem::path& p);

// Delimited input needs a header with a `text` column and optional `label`
// and `id` columns; JSONL records use the same keys. Missing ids become
// "row-N" (1-based). Throws CorpusError naming the record on unknown labels,
// empty text and duplicate ids.
std::vector<LabeledDocument> load_corpus(std::istream& in, CorpusFormat format);
std::vector<LabeledDocument> load_corpus(const std::filesystem::path& path,
                                         CorpusFormat format);

struct Thresholds {
  double positive = 0.05;
  double negative = -0.05;
};

// Parses "pos,neg", e.g. "0.5,-0.5". Throws Error unless neg < pos.
Thresholds parse_thresholds(std::string_view text);

// positive if compound >= positive threshold, negative if <= negative
// threshold, neutral otherwise.
Label classify(double compound, const Thresholds& thresholds = {});

struct ScoredDocument {
  std::string id;
  std::string text;
  SentimentScores scores;
  Label label = Label::kNeutral;
  std::optional<Label> gold;
};

struct ComparisonRow {
  std::string id;
  std::string text;
  double compound_before = 0.0;
  double compound_after = 0.0;
  Label label_before = Label::kNeutral;
  Label label_after = Label::kNeutral;
  std::optional<Label> gold;
};

// Scoring runs on `threads` workers (0 = hardware concurrency); output order
// always follows the corpus.
std::vector<ScoredDocument> score_corpus(
    const std::vector<LabeledDocument>& corpus, const Lexicon& lexicon,
    const EngineConfig& cfg = {}, const Thresholds& thresholds = {},
    unsigned threads = 0);

std::vector<ComparisonRow> compare_lexicons(
    const std::vector<LabeledDocument>& corpus, const Lexicon& base,
    const Lexicon& augmented, const EngineConfig& cfg = {},
    const Thresholds& thresholds = {}, unsigned threads = 0);

}  // namespace naijasent

#endif  // NAIJASENT_CORPUS_H_
