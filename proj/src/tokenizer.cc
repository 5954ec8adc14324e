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

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

#include "naijasent/engine.h"
#include "text.h"

namespace naijasent {

namespace {

// Punctuation runs that may be peeled off one end of a token.
constexpr std::array<std::string_view, 17> kEdgePunctuation = {
    ".", "!", "?", ",", ";", ":", "-", "'", "\"",
    "!!", "!!!", "??", "???", "?!?", "!?!", "?!?!", "!?!?"};

using WordSet = std::unordered_set<std::string_view>;

// Words of the text with every ASCII punctuation character deleted, keeping
// only those longer than one code point. Views point into `storage`.
WordSet plain_words(std::string_view text, std::string& storage) {
  storage.clear();
  storage.reserve(text.size());
  for (char c : text) {
    if (!text::is_ascii_punct(static_cast<unsigned char>(c))) {
      storage.push_back(c);
    }
  }
  WordSet words;
  for (std::string_view w : text::split_whitespace(storage)) {
    if (text::codepoint_count(w) > 1) words.insert(w);
  }
  return words;
}

std::string_view strip_edge_punctuation(std::string_view token,
                                        const WordSet& words) {
  for (std::string_view p : kEdgePunctuation) {
    if (token.size() > p.size() && token.starts_with(p)) {
      auto rest = token.substr(p.size());
      if (words.contains(rest)) return rest;
    }
    if (token.size() > p.size() && token.ends_with(p)) {
      auto rest = token.substr(0, token.size() - p.size());
      if (words.contains(rest)) return rest;
    }
  }
  return token;
}

bool is_ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

}  // namespace

std::string collapse_elongation(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  std::size_t run = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    run = (i > 0 && c == word[i - 1]) ? run + 1 : 1;
    if (run > 3 && is_ascii_letter(c)) continue;
    out.push_back(c);
  }
  return out;
}

TokenizedDocument tokenize(std::string_view text, const EngineConfig& cfg) {
  TokenizedDocument doc;
  doc.original = std::string(text);
  std::string storage;
  WordSet words = plain_words(text, storage);

  std::size_t all_caps = 0;
  for (std::string_view raw : text::split_whitespace(text)) {
    if (text::codepoint_count(raw) <= 1) continue;
    std::string_view token = strip_edge_punctuation(raw, words);
    if (text::is_all_caps(token)) ++all_caps;
    std::string key = text::ascii_lower(token);
    if (cfg.normalize_elongation) key = collapse_elongation(key);
    doc.tokens.emplace_back(token);
    doc.keys.push_back(std::move(key));
  }
  doc.is_cap_differential = all_caps > 0 && all_caps < doc.tokens.size();
  return doc;
}

}  // namespace naijasent
