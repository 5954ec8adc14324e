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

#include "naijasent/lexicon.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "naijasent/atomic_file.h"
#include "naijasent/error.h"
#include "text.h"

namespace naijasent {

std::string normalize_token(std::string_view token) {
  return text::ascii_lower(token);
}

void validate_entry(const LexiconEntry& entry) {
  if (entry.token.empty()) throw LexiconError("empty token");
  if (entry.token.find_first_of("\t\n\r") != std::string::npos) {
    throw LexiconError("token '" + entry.token +
                       "' contains a tab or line break");
  }
  if (!std::isfinite(entry.valence) || entry.valence < kMinValence ||
      entry.valence > kMaxValence) {
    throw LexiconError("valence " + format_round_trip(entry.valence) +
                       " for '" + entry.token + "' is outside [-4, 4]");
  }
  if (!std::isfinite(entry.dispersion) || entry.dispersion < 0.0) {
    throw LexiconError("dispersion for '" + entry.token +
                       "' must be a non-negative number");
  }
}

// ---------------------------------------------------------------------------
// Lexicon

void Lexicon::note_phrase_length(const std::string& token) {
  std::size_t words = text::split_whitespace(token).size();
  max_phrase_words_ = std::max(max_phrase_words_, std::max<std::size_t>(words, 1));
}

bool Lexicon::insert(LexiconEntry entry) {
  entry.token = normalize_token(entry.token);
  validate_entry(entry);
  if (entries_.contains(entry.token)) return false;
  note_phrase_length(entry.token);
  std::string key = entry.token;
  entries_.emplace(std::move(key), std::move(entry));
  return true;
}

void Lexicon::insert_or_assign(LexiconEntry entry) {
  entry.token = normalize_token(entry.token);
  validate_entry(entry);
  note_phrase_length(entry.token);
  std::string key = entry.token;
  entries_.insert_or_assign(std::move(key), std::move(entry));
}

const LexiconEntry* Lexicon::find(std::string_view token) const {
  return find_normalized(normalize_token(token));
}

std::vector<const LexiconEntry*> Lexicon::sorted() const {
  std::vector<const LexiconEntry*> out;
  out.reserve(entries_.size());
  for (const auto& [key, entry] : entries_) out.push_back(&entry);
  std::sort(out.begin(), out.end(),
            [](const LexiconEntry* a, const LexiconEntry* b) {
              return a->token < b->token;
            });
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return cols;
}

std::vector<double> parse_ratings(std::string_view field, std::size_t line) {
  field = text::trim(field);
  if (field.size() < 2 || field.front() != '[' || field.back() != ']') {
    throw LexiconError("raw ratings must be a bracketed list", line);
  }
  field = text::trim(field.substr(1, field.size() - 2));
  std::vector<double> out;
  if (field.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = field.find(',', start);
    auto item = text::trim(field.substr(
        start, pos == std::string_view::npos ? std::string_view::npos
                                             : pos - start));
    auto value = text::parse_double(item);
    if (!value) {
      throw LexiconError("bad rating '" + std::string(item) + "'", line);
    }
    out.push_back(*value);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

LexiconEntry parse_line(std::string_view line, std::size_t line_no) {
  auto cols = split_tabs(line);
  if (cols.size() < 2 || cols.size() > 4) {
    throw LexiconError("expected 2 to 4 tab-separated columns, found " +
                           std::to_string(cols.size()),
                       line_no);
  }
  LexiconEntry entry;
  entry.token = normalize_token(cols[0]);
  if (entry.token.empty()) throw LexiconError("empty token", line_no);
  auto mean = text::parse_double(text::trim(cols[1]));
  if (!mean) {
    throw LexiconError("bad mean '" + std::string(cols[1]) + "'", line_no);
  }
  entry.valence = *mean;
  if (cols.size() >= 3) {
    auto sd = text::parse_double(text::trim(cols[2]));
    if (!sd) {
      throw LexiconError("bad standard deviation '" + std::string(cols[2]) +
                             "'",
                         line_no);
    }
    entry.dispersion = *sd;
  }
  if (cols.size() == 4) entry.raw_ratings = parse_ratings(cols[3], line_no);
  try {
    validate_entry(entry);
  } catch (const LexiconError& e) {
    throw LexiconError(e.what(), line_no);
  }
  return entry;
}

bool spelled_lowercase(std::string_view raw) {
  return std::none_of(raw.begin(), raw.end(),
                      [](char c) { return c >= 'A' && c <= 'Z'; });
}

}  // namespace

Lexicon parse_lexicon(std::istream& in, std::string name,
                      const ParseOptions& options) {
  struct Seen {
    std::size_t line;
    bool lowercase_spelling;
  };
  Lexicon lexicon(std::move(name));
  std::unordered_map<std::string, Seen> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty()) continue;
    LexiconEntry entry = parse_line(line, line_no);
    bool lower = spelled_lowercase(line.substr(0, line.find('\t')));
    auto it = seen.find(entry.token);
    if (it == seen.end()) {
      seen.emplace(entry.token, Seen{line_no, lower});
      lexicon.insert(std::move(entry));
      continue;
    }
    if (options.duplicates == DuplicatePolicy::kError) {
      throw LexiconError("duplicate token '" + entry.token +
                             "' (first seen on line " +
                             std::to_string(it->second.line) + ")",
                         line_no);
    }
    if (it->second.lowercase_spelling && !lower) continue;
    it->second = Seen{line_no, lower};
    lexicon.insert_or_assign(std::move(entry));
  }
  if (in.bad()) throw IoError("read error in lexicon '" + lexicon.name() + "'");
  return lexicon;
}

Lexicon parse_lexicon_file(const std::filesystem::path& path,
                           const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon " + path.string());
  return parse_lexicon(in, path.stem().string(), options);
}

// ---------------------------------------------------------------------------
// Serialization

std::string format_round_trip(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, ptr);
}

void write_lexicon(const Lexicon& lexicon, std::ostream& out) {
  for (const LexiconEntry* e : lexicon.sorted()) {
    out << e->token << '\t' << format_round_trip(e->valence) << '\t'
        << format_round_trip(e->dispersion) << "\t[";
    for (std::size_t i = 0; i < e->raw_ratings.size(); ++i) {
      if (i > 0) out << ", ";
      out << format_round_trip(e->raw_ratings[i]);
    }
    out << "]\n";
  }
}

void serialize_lexicon_file(const Lexicon& lexicon,
                            const std::filesystem::path& path) {
  AtomicFile file(path);
  write_lexicon(lexicon, file.stream());
  file.commit();
}

// ---------------------------------------------------------------------------
// Merging

MergePolicy parse_merge_policy(std::string_view text) {
  if (text == "override") return MergePolicy::kOverride;
  if (text == "keep-base") return MergePolicy::kKeepBase;
  if (text == "error-on-conflict") return MergePolicy::kErrorOnConflict;
  throw Error("unknown merge policy '" + std::string(text) +
              "' (expected override, keep-base or error-on-conflict)");
}

std::string_view to_string(MergePolicy policy) {
  switch (policy) {
    case MergePolicy::kOverride:
      return "override";
    case MergePolicy::kKeepBase:
      return "keep-base";
    case MergePolicy::kErrorOnConflict:
      return "error-on-conflict";
  }
  return "override";
}

std::vector<Collision> find_collisions(const Lexicon& base,
                                       const Lexicon& augmentation) {
  std::vector<Collision> out;
  for (const auto& [token, entry] : augmentation.entries()) {
    if (const LexiconEntry* b = base.find_normalized(token)) {
      out.push_back({token, b->valence, entry.valence});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Collision& a, const Collision& b) {
              return a.token < b.token;
            });
  return out;
}

Lexicon merge(const Lexicon& base, const Lexicon& augmentation,
              MergePolicy policy) {
  if (policy == MergePolicy::kErrorOnConflict) {
    auto collisions = find_collisions(base, augmentation);
    if (!collisions.empty()) {
      std::vector<std::string> tokens;
      for (auto& c : collisions) tokens.push_back(std::move(c.token));
      throw MergeConflictError(std::move(tokens));
    }
  }
  Lexicon result = base;
  result.set_name(base.name() + "+" + augmentation.name());
  for (const auto& [token, entry] : augmentation.entries()) {
    if (policy == MergePolicy::kOverride) {
      result.insert_or_assign(entry);
    } else {
      result.insert(entry);
    }
  }
  return result;
}

std::vector<std::string> lint_rating_means(const Lexicon& lexicon) {
  std::vector<std::string> out;
  for (const LexiconEntry* e : lexicon.sorted()) {
    if (e->raw_ratings.empty()) continue;
    double mean =
        std::accumulate(e->raw_ratings.begin(), e->raw_ratings.end(), 0.0) /
        static_cast<double>(e->raw_ratings.size());
    if (std::fabs(mean - e->valence) > 1e-6) out.push_back(e->token);
  }
  return out;
}

}  // namespace naijasent
