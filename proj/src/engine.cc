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

#include "naijasent/engine.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "text.h"

namespace naijasent {

namespace {

const std::unordered_set<std::string_view>& negation_words() {
  static const std::unordered_set<std::string_view> kWords = {
      "aint",     "arent",    "cannot",   "cant",     "couldnt",  "darent",
      "didnt",    "doesnt",   "ain't",    "aren't",   "can't",    "couldn't",
      "daren't",  "didn't",   "doesn't",  "dont",     "hadnt",    "hasnt",
      "havent",   "isnt",     "mightnt",  "mustnt",   "neither",  "don't",
      "hadn't",   "hasn't",   "haven't",  "isn't",    "mightn't", "mustn't",
      "neednt",   "needn't",  "never",    "none",     "nope",     "nor",
      "not",      "nothing",  "nowhere",  "oughtnt",  "shant",    "shouldnt",
      "uhuh",     "wasnt",    "werent",   "oughtn't", "shan't",   "shouldn't",
      "uh-uh",    "wasn't",   "weren't",  "without",  "wont",     "wouldnt",
      "won't",    "wouldn't", "rarely",   "seldom",   "despite"};
  return kWords;
}

// +1 for intensifiers, -1 for dampeners. Multi-word entries only fire
// through the idiom n-gram check.
const std::unordered_map<std::string_view, int>& booster_words() {
  static const std::unordered_map<std::string_view, int> kWords = {
      {"absolutely", 1},   {"amazingly", 1},    {"awfully", 1},
      {"completely", 1},   {"considerably", 1}, {"decidedly", 1},
      {"deeply", 1},       {"effing", 1},       {"enormously", 1},
      {"entirely", 1},     {"especially", 1},   {"exceptionally", 1},
      {"extremely", 1},    {"fabulously", 1},   {"flipping", 1},
      {"flippin", 1},      {"fricking", 1},     {"frickin", 1},
      {"frigging", 1},     {"friggin", 1},      {"fully", 1},
      {"fucking", 1},      {"greatly", 1},      {"hella", 1},
      {"highly", 1},       {"hugely", 1},       {"incredibly", 1},
      {"intensely", 1},    {"majorly", 1},      {"more", 1},
      {"most", 1},         {"particularly", 1}, {"purely", 1},
      {"quite", 1},        {"really", 1},       {"remarkably", 1},
      {"so", 1},           {"substantially", 1}, {"thoroughly", 1},
      {"totally", 1},      {"tremendously", 1}, {"uber", 1},
      {"unbelievably", 1}, {"unusually", 1},    {"utterly", 1},
      {"very", 1},         {"almost", -1},      {"barely", -1},
      {"hardly", -1},      {"just enough", -1}, {"kind of", -1},
      {"kinda", -1},       {"kindof", -1},      {"kind-of", -1},
      {"less", -1},        {"little", -1},      {"marginally", -1},
      {"occasionally", -1}, {"partly", -1},     {"scarcely", -1},
      {"slightly", -1},    {"somewhat", -1},    {"sort of", -1},
      {"sorta", -1},       {"sortof", -1},      {"sort-of", -1}};
  return kWords;
}

// Idioms that replace the valence of a lexicon word they contain.
const std::unordered_map<std::string_view, double>& special_idioms() {
  static const std::unordered_map<std::string_view, double> kIdioms = {
      {"the shit", 3.0},   {"the bomb", 3.0},       {"bad ass", 1.5},
      {"yeah right", -2.0}, {"kiss of death", -1.5}};
  return kIdioms;
}

constexpr double kNeverSoScalar = 1.25;

int booster_direction(std::string_view key) {
  const auto& words = booster_words();
  auto it = words.find(key);
  return it == words.end() ? 0 : it->second;
}

bool is_so_or_this(std::string_view key) {
  return key == "so" || key == "this";
}

// Booster contribution of the context word, sign-aligned with `valence`.
double booster_scalar(std::string_view surface, std::string_view key,
                      double valence, bool cap_differential,
                      const EngineConfig& cfg) {
  int dir = booster_direction(key);
  if (dir == 0) return 0.0;
  double scalar = dir * cfg.booster_increment;
  if (valence < 0) scalar = -scalar;
  if (cap_differential && text::is_all_caps(surface)) {
    scalar += valence > 0 ? cfg.caps_scalar : -cfg.caps_scalar;
  }
  return scalar;
}

double negation_rule(double valence, const std::vector<std::string>& keys,
                     std::size_t distance_index, std::size_t i,
                     const EngineConfig& cfg) {
  switch (distance_index) {
    case 0:
      if (is_negation(keys[i - 1])) valence *= cfg.negation_scalar;
      break;
    case 1:
      if (keys[i - 2] == "never" && is_so_or_this(keys[i - 1])) {
        valence *= kNeverSoScalar;
      } else if (keys[i - 2] == "without" && keys[i - 1] == "doubt") {
        // "without doubt" does not negate.
      } else if (is_negation(keys[i - 2])) {
        valence *= cfg.negation_scalar;
      }
      break;
    case 2:
      // The reference rule also amplifies when the word right before the
      // target is "so"/"this", with or without a preceding "never".
      if ((keys[i - 3] == "never" && is_so_or_this(keys[i - 2])) ||
          is_so_or_this(keys[i - 1])) {
        valence *= kNeverSoScalar;
      } else if (keys[i - 3] == "without" &&
                 (keys[i - 2] == "doubt" || keys[i - 1] == "doubt")) {
      } else if (is_negation(keys[i - 3])) {
        valence *= cfg.negation_scalar;
      }
      break;
  }
  return valence;
}

std::string join2(std::string_view a, std::string_view b) {
  std::string out;
  out.reserve(a.size() + b.size() + 1);
  out.append(a).push_back(' ');
  out.append(b);
  return out;
}

std::string join3(std::string_view a, std::string_view b, std::string_view c) {
  return join2(join2(a, b), c);
}

// Requires i >= 3.
double idiom_rule(double valence, const std::vector<std::string>& keys,
                  std::size_t i, const EngineConfig& cfg) {
  const auto& idioms = special_idioms();
  const std::string onezero = join2(keys[i - 1], keys[i]);
  const std::string twoonezero = join3(keys[i - 2], keys[i - 1], keys[i]);
  const std::string twoone = join2(keys[i - 2], keys[i - 1]);
  const std::string threetwoone = join3(keys[i - 3], keys[i - 2], keys[i - 1]);
  const std::string threetwo = join2(keys[i - 3], keys[i - 2]);
  for (const std::string* seq :
       {&onezero, &twoonezero, &twoone, &threetwoone, &threetwo}) {
    auto it = idioms.find(*seq);
    if (it != idioms.end()) {
      valence = it->second;
      break;
    }
  }
  if (keys.size() - 1 > i) {
    auto it = idioms.find(join2(keys[i], keys[i + 1]));
    if (it != idioms.end()) valence = it->second;
  }
  if (keys.size() - 1 > i + 1) {
    auto it = idioms.find(join3(keys[i], keys[i + 1], keys[i + 2]));
    if (it != idioms.end()) valence = it->second;
  }
  // Multi-word dampeners such as "kind of" right before the target.
  for (const std::string* seq : {&threetwoone, &threetwo, &twoone}) {
    int dir = booster_direction(*seq);
    if (dir != 0) valence += dir * cfg.booster_increment;
  }
  return valence;
}

double least_rule(double valence, const std::vector<std::string>& keys,
                  std::size_t i, const Lexicon& lexicon,
                  const EngineConfig& cfg) {
  if (i > 0 && keys[i - 1] == "least" &&
      !lexicon.find_normalized(keys[i - 1])) {
    if (i == 1 || (keys[i - 2] != "at" && keys[i - 2] != "very")) {
      valence *= cfg.negation_scalar;
    }
  }
  return valence;
}

// Applies caps emphasis and the three-word look-back to a lexicon valence
// found at position i.
double contextual_valence(const TokenizedDocument& doc, std::size_t i,
                          double valence, bool target_all_caps,
                          const Lexicon& lexicon, const EngineConfig& cfg) {
  const auto& keys = doc.keys;
  if (target_all_caps && doc.is_cap_differential) {
    valence += valence > 0 ? cfg.caps_scalar : -cfg.caps_scalar;
  }
  for (std::size_t d = 0; d < 3; ++d) {
    if (i <= d) break;
    std::size_t j = i - (d + 1);
    // Words that carry their own valence are not treated as modifiers.
    if (lexicon.find_normalized(keys[j])) continue;
    double s = booster_scalar(doc.tokens[j], keys[j], valence,
                              doc.is_cap_differential, cfg);
    if (s != 0.0) s *= cfg.booster_distance_decay[d];
    valence += s;
    valence = negation_rule(valence, keys, d, i, cfg);
    if (d == 2) valence = idiom_rule(valence, keys, i, cfg);
  }
  return least_rule(valence, keys, i, lexicon, cfg);
}

bool span_all_caps(const TokenizedDocument& doc, std::size_t index,
                   std::size_t span) {
  bool cased = false;
  for (std::size_t k = index; k < index + span; ++k) {
    for (char c : doc.tokens[k]) {
      if (c >= 'a' && c <= 'z') return false;
      if (c >= 'A' && c <= 'Z') cased = true;
    }
  }
  return cased;
}

bool is_kind_of(const TokenizedDocument& doc, std::size_t i) {
  return doc.keys[i] == "kind" && i + 1 < doc.size() &&
         doc.keys[i + 1] == "of";
}

}  // namespace

bool is_booster(std::string_view key) { return booster_direction(key) != 0; }

bool is_negation(std::string_view key) {
  return negation_words().contains(key) ||
         key.find("n't") != std::string_view::npos;
}

double token_valence(const TokenizedDocument& doc, std::size_t index,
                     const Lexicon& lexicon, const EngineConfig& cfg) {
  if (index >= doc.size()) {
    throw std::out_of_range("token index " + std::to_string(index) +
                            " out of range for " + std::to_string(doc.size()) +
                            " tokens");
  }
  const std::string& key = doc.keys[index];
  if (is_booster(key) || is_negation(key) || is_kind_of(doc, index)) {
    return 0.0;
  }
  const LexiconEntry* entry = lexicon.find_normalized(key);
  if (!entry) return 0.0;
  return contextual_valence(doc, index, entry->valence,
                            text::is_all_caps(doc.tokens[index]), lexicon,
                            cfg);
}

NgramMatch match_ngrams(const TokenizedDocument& doc, std::size_t index,
                        const Lexicon& lexicon, const EngineConfig& cfg) {
  if (index >= doc.size()) return {};
  std::size_t longest = std::min<std::size_t>(
      {static_cast<std::size_t>(std::max(cfg.max_ngram, 1)),
       lexicon.max_phrase_words(), doc.size() - index});
  std::string phrase;
  for (std::size_t n = longest; n >= 2; --n) {
    phrase = doc.keys[index];
    for (std::size_t k = 1; k < n; ++k) {
      phrase.push_back(' ');
      phrase.append(doc.keys[index + k]);
    }
    if (const LexiconEntry* e = lexicon.find_normalized(phrase)) {
      return {e, n};
    }
  }
  return {lexicon.find_normalized(doc.keys[index]), 1};
}

std::vector<double> but_clause_reweight(std::vector<double> valences,
                                        std::span<const std::string> keys,
                                        const EngineConfig& cfg) {
  auto it = std::find(keys.begin(), keys.end(), "but");
  if (it == keys.end()) return valences;
  auto pivot = static_cast<std::size_t>(it - keys.begin());
  for (std::size_t i = 0; i < valences.size(); ++i) {
    if (i < pivot) {
      valences[i] *= cfg.but_before_weight;
    } else if (i > pivot) {
      valences[i] *= cfg.but_after_weight;
    }
  }
  return valences;
}

double punctuation_amplifier(std::string_view text, const EngineConfig& cfg) {
  auto exclamations = std::count(text.begin(), text.end(), '!');
  auto questions = std::count(text.begin(), text.end(), '?');
  double ep = static_cast<double>(std::min<std::ptrdiff_t>(
                  exclamations, cfg.exclamation_max_count)) *
              cfg.exclamation_unit;
  double qm = 0.0;
  if (questions > 1) {
    qm = questions <= 3 ? static_cast<double>(questions) * cfg.question_unit
                        : cfg.question_cap;
  }
  return ep + qm;
}

double normalize_compound(double sum, double alpha) {
  double score = sum / std::sqrt(sum * sum + alpha);
  return std::clamp(score, -1.0, 1.0);
}

std::vector<double> token_valences(const TokenizedDocument& doc,
                                   const Lexicon& lexicon,
                                   const EngineConfig& cfg) {
  std::vector<double> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size();) {
    NgramMatch m = match_ngrams(doc, i, lexicon, cfg);
    if (m.span >= 2) {
      out.push_back(contextual_valence(doc, i, m.entry->valence,
                                       span_all_caps(doc, i, m.span), lexicon,
                                       cfg));
      out.insert(out.end(), m.span - 1, 0.0);
      i += m.span;
      continue;
    }
    out.push_back(m.entry ? token_valence(doc, i, lexicon, cfg) : 0.0);
    ++i;
  }
  return out;
}

SentimentScores polarity_scores(const TokenizedDocument& doc,
                                const Lexicon& lexicon,
                                const EngineConfig& cfg) {
  SentimentScores scores;
  if (doc.tokens.empty()) return scores;

  std::vector<double> sentiments =
      but_clause_reweight(token_valences(doc, lexicon, cfg), doc.keys, cfg);

  double sum = 0.0;
  for (double v : sentiments) sum += v;
  double amplifier = punctuation_amplifier(doc.original, cfg);
  if (sum > 0) {
    sum += amplifier;
  } else if (sum < 0) {
    sum -= amplifier;
  }
  scores.compound = normalize_compound(sum, cfg.alpha);

  // The +1/-1 offsets put sentiment words on the same footing as neutral
  // words, which count 1 each.
  double pos_sum = 0.0;
  double neg_sum = 0.0;
  double neu_count = 0.0;
  for (double v : sentiments) {
    if (v > 0) pos_sum += v + 1.0;
    if (v < 0) neg_sum += v - 1.0;
    if (v == 0) neu_count += 1.0;
  }
  if (pos_sum > std::fabs(neg_sum)) {
    pos_sum += amplifier;
  } else if (pos_sum < std::fabs(neg_sum)) {
    neg_sum -= amplifier;
  }
  double total = pos_sum + std::fabs(neg_sum) + neu_count;
  scores.positive = std::fabs(pos_sum / total);
  scores.negative = std::fabs(neg_sum / total);
  scores.neutral = std::fabs(neu_count / total);
  return scores;
}

SentimentScores polarity_scores(std::string_view text, const Lexicon& lexicon,
                                const EngineConfig& cfg) {
  return polarity_scores(tokenize(text, cfg), lexicon, cfg);
}

}  // namespace naijasent
