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

#ifndef NAIJASENT_LEXICON_H_
#define NAIJASENT_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace naijasent {

inline constexpr double kMinValence = -4.0;
inline constexpr double kMaxValence = 4.0;

// One sentiment token. Phrases are stored with single internal spaces.
struct LexiconEntry {
  std::string token;
  double valence = 0.0;
  double dispersion = 0.0;
  std::vector<double> raw_ratings;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

// Throws LexiconError when the entry breaks the token or valence contract.
// Raw ratings whose mean disagrees with the valence are not rejected; the
// reference asset carries one such row. See lint_rating_means().
void validate_entry(const LexiconEntry& entry);

// Lowercases ASCII letters; other bytes pass through.
std::string normalize_token(std::string_view token);

namespace internal {
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};
}  // namespace internal

// Token -> entry map with case-insensitive lookup. Immutable once handed to
// scorers; concurrent reads are safe.
class Lexicon {
 public:
  using Map = std::unordered_map<std::string, LexiconEntry,
                                 internal::StringHash, std::equal_to<>>;

  Lexicon() = default;
  explicit Lexicon(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Normalizes and validates the token. Returns false (and leaves the
  // lexicon untouched) if the token is already present.
  bool insert(LexiconEntry entry);
  void insert_or_assign(LexiconEntry entry);

  // Case-insensitive. Returns nullptr when absent.
  const LexiconEntry* find(std::string_view token) const;
  // Lookup for keys that are already lowercase; no allocation.
  const LexiconEntry* find_normalized(std::string_view key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }
  bool contains(std::string_view token) const { return find(token); }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }

  // Entries in ascending byte order of their tokens.
  std::vector<const LexiconEntry*> sorted() const;

  // Word count of the longest entry (1 for a lexicon of single words, 0 when
  // empty).
  std::size_t max_phrase_words() const { return max_phrase_words_; }

  // Equality covers the entries only; the name is a label.
  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.entries_ == b.entries_;
  }

 private:
  void note_phrase_length(const std::string& token);

  std::string name_;
  Map entries_;
  std::size_t max_phrase_words_ = 0;
};

enum class DuplicatePolicy {
  kError,     // any token seen twice (after lowercasing) is an error
  kLastWins,  // ingest mode for the reference asset, see ParseOptions
};

struct ParseOptions {
  // kLastWins mirrors how the reference analyzer loads its own file: later
  // rows replace earlier ones, and a row spelled in lowercase is never
  // replaced by a case-folded collision, since mixed-case rows are
  // unreachable through lowercase lookup there.
  DuplicatePolicy duplicates = DuplicatePolicy::kError;
};

// Parses `token<TAB>mean[<TAB>stddev[<TAB>[r1, r2, ...]]]` lines. Blank
// lines are skipped and a trailing CR is tolerated.
Lexicon parse_lexicon(std::istream& in, std::string name,
                      const ParseOptions& options = {});
Lexicon parse_lexicon_file(const std::filesystem::path& path,
                           const ParseOptions& options = {});

// Four columns, tokens in ascending byte order, shortest round-trip digits.
void write_lexicon(const Lexicon& lexicon, std::ostream& out);
void serialize_lexicon_file(const Lexicon& lexicon,
                            const std::filesystem::path& path);

// Shortest decimal text that parses back to exactly `value`.
std::string format_round_trip(double value);

enum class MergePolicy { kOverride, kKeepBase, kErrorOnConflict };

MergePolicy parse_merge_policy(std::string_view text);
std::string_view to_string(MergePolicy policy);

struct Collision {
  std::string token;
  double base_valence;
  double augmentation_valence;
};

// Tokens present in both lexicons, sorted.
std::vector<Collision> find_collisions(const Lexicon& base,
                                       const Lexicon& augmentation);

// Returns a new lexicon named "<base>+<augmentation>". Throws
// MergeConflictError listing every colliding token under kErrorOnConflict.
Lexicon merge(const Lexicon& base, const Lexicon& augmentation,
              MergePolicy policy = MergePolicy::kOverride);

// Entries whose raw ratings do not average to the stored valence (1e-6).
std::vector<std::string> lint_rating_means(const Lexicon& lexicon);

}  // namespace naijasent

#endif  // NAIJASENT_LEXICON_H_
