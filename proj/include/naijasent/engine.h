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

#ifndef NAIJASENT_ENGINE_H_
#define NAIJASENT_ENGINE_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "naijasent/lexicon.h"

namespace naijasent {

// Rule constants. Defaults reproduce the reference VADER rule set.
struct EngineConfig {
  double alpha = 15.0;               // compound normalization constant
  double booster_increment = 0.293;  // degree adverbs ("very", "barely")
  double caps_scalar = 0.733;        // ALL-CAPS emphasis
  double negation_scalar = -0.74;
  double exclamation_unit = 0.292;
  int exclamation_max_count = 4;
  double question_unit = 0.18;  // per mark, for 2 or 3 marks
  double question_cap = 0.96;   // 4 or more marks
  double but_before_weight = 0.5;
  double but_after_weight = 1.5;
  // Applied to booster contributions 1, 2 and 3 words before the target.
  std::array<double, 3> booster_distance_decay{1.0, 0.95, 0.9};
  int max_ngram = 3;
  // Collapse letter runs longer than 3 ("gooooal" -> "goooal") for lookup.
  bool normalize_elongation = false;

  friend bool operator==(const EngineConfig&, const EngineConfig&) = default;
};

// Throws ConfigError when a constant breaks its sign or range contract.
void validate(const EngineConfig& cfg);

// `key = value` lines; blank lines and lines starting with '#' are ignored.
// Keys are the EngineConfig field names. The decay is a comma-separated
// triple. Throws ConfigError on unknown keys or bad values.
EngineConfig parse_engine_config(std::istream& in);
EngineConfig load_engine_config(const std::filesystem::path& path);

struct SentimentScores {
  double negative = 0.0;
  double neutral = 0.0;
  double positive = 0.0;
  double compound = 0.0;

  friend bool operator==(const SentimentScores&,
                         const SentimentScores&) = default;
};

struct TokenizedDocument {
  std::string original;
  // Surface forms, order preserved. Single-code-point tokens are dropped and
  // one leading or trailing punctuation run is stripped when what remains is
  // a plain word of the text; emoticons and contractions survive intact.
  std::vector<std::string> tokens;
  // Lowercased lookup keys parallel to `tokens` (elongation-collapsed when
  // enabled).
  std::vector<std::string> keys;
  // Some but not all tokens are ALL CAPS.
  bool is_cap_differential = false;

  std::size_t size() const { return tokens.size(); }
};

TokenizedDocument tokenize(std::string_view text, const EngineConfig& cfg = {});

// Collapses runs of one ASCII letter longer than 3 down to 3.
std::string collapse_elongation(std::string_view word);

bool is_booster(std::string_view key);
// Negation word, or a contraction containing "n't".
bool is_negation(std::string_view key);

// Context-adjusted valence of the single token at `index`. Zero for tokens
// outside the lexicon, booster and negation words, and the "kind" of
// "kind of". Throws std::out_of_range on a bad index.
double token_valence(const TokenizedDocument& doc, std::size_t index,
                     const Lexicon& lexicon, const EngineConfig& cfg = {});

struct NgramMatch {
  const LexiconEntry* entry = nullptr;  // null when nothing matched
  std::size_t span = 1;
};

// Longest lexicon entry starting at `index`, trying max_ngram words down to
// one. A miss reports span 1.
NgramMatch match_ngrams(const TokenizedDocument& doc, std::size_t index,
                        const Lexicon& lexicon, const EngineConfig& cfg = {});

// Splits at the first "but": earlier valences are scaled by
// but_before_weight, later ones by but_after_weight. `keys` are lowercase.
std::vector<double> but_clause_reweight(std::vector<double> valences,
                                        std::span<const std::string> keys,
                                        const EngineConfig& cfg = {});

double punctuation_amplifier(std::string_view text,
                             const EngineConfig& cfg = {});

// s / sqrt(s^2 + alpha), clamped to [-1, 1].
double normalize_compound(double sum, double alpha = 15.0);

// Per-token valences after phrase matching and context rules, before the
// "but" reweighting. Tokens consumed by a phrase contribute 0.
std::vector<double> token_valences(const TokenizedDocument& doc,
                                   const Lexicon& lexicon,
                                   const EngineConfig& cfg = {});

SentimentScores polarity_scores(const TokenizedDocument& doc,
                                const Lexicon& lexicon,
                                const EngineConfig& cfg = {});
SentimentScores polarity_scores(std::string_view text, const Lexicon& lexicon,
                                const EngineConfig& cfg = {});

}  // namespace naijasent

#endif  // NAIJASENT_ENGINE_H_
