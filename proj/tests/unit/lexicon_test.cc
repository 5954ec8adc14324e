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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "naijasent/error.h"
#include "support/test_support.h"

namespace naijasent {
namespace {

Lexicon parse(const std::string& text, ParseOptions opts = {}) {
  std::istringstream in(text);
  return parse_lexicon(in, "t", opts);
}

std::string serialize(const Lexicon& lex) {
  std::ostringstream out;
  write_lexicon(lex, out);
  return out.str();
}

TEST(ParseLexicon, FourColumnLine) {
  Lexicon lex = parse("kasala\t-2.2\t0.5\t[-2, -3, -2, -2]\n");
  ASSERT_EQ(lex.size(), 1u);
  const LexiconEntry* e = lex.find("kasala");
  ASSERT_NE(e, nullptr);
  EXPECT_DOUBLE_EQ(e->valence, -2.2);
  EXPECT_DOUBLE_EQ(e->dispersion, 0.5);
  EXPECT_EQ(e->raw_ratings, (std::vector<double>{-2, -3, -2, -2}));
}

TEST(ParseLexicon, TwoColumnForm) {
  Lexicon lex = parse("good\t1.9\n");
  const LexiconEntry* e = lex.find("good");
  ASSERT_NE(e, nullptr);
  EXPECT_DOUBLE_EQ(e->valence, 1.9);
  EXPECT_EQ(e->dispersion, 0.0);
  EXPECT_TRUE(e->raw_ratings.empty());
  EXPECT_EQ(parse(serialize(lex)), lex);
}

TEST(ParseLexicon, EmptyInput) {
  EXPECT_TRUE(parse("").empty());
  EXPECT_TRUE(parse("\n\r\n").empty());
}

TEST(ParseLexicon, LowercasesAndLooksUpCaseInsensitively) {
  Lexicon lex = parse("Ginger\t2.1\r\n");
  ASSERT_NE(lex.find("ginger"), nullptr);
  EXPECT_EQ(lex.find("GINGER"), lex.find("ginger"));
  EXPECT_EQ(lex.find("ginger")->token, "ginger");
}

TEST(ParseLexicon, PhraseTokens) {
  Lexicon lex = parse("na beg\t-1.5\nbeg\t-0.5\n");
  EXPECT_EQ(lex.max_phrase_words(), 2u);
  EXPECT_NE(lex.find("NA BEG"), nullptr);
}

TEST(ParseLexicon, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const LexiconError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("good\t1.9\nbad\n"), 2u);
  EXPECT_EQ(line_of("good\t1.9\n\nbad\tabc\n"), 3u);
  EXPECT_EQ(line_of("hot\t4.5\n"), 1u);
  EXPECT_EQ(line_of("a\t1\nb\t1\nA\t2\n"), 3u);
  EXPECT_EQ(line_of("x\t1\t0.1\t[1, 2\n"), 1u);
  EXPECT_EQ(line_of("x\t1\t-0.1\n"), 1u);
  EXPECT_EQ(line_of("\t1\n"), 1u);
}

TEST(ParseLexicon, LastWinsKeepsLowercaseSpelling) {
  const std::string text = "lol\t1.8\n:d\t1.1\n:D\t2.2\nlol\t2.9\n";
  EXPECT_THROW(parse(text), LexiconError);
  Lexicon lex = parse(text, {DuplicatePolicy::kLastWins});
  EXPECT_DOUBLE_EQ(lex.find("lol")->valence, 2.9);
  EXPECT_DOUBLE_EQ(lex.find(":d")->valence, 1.1);
}

TEST(ParseLexicon, ReferenceAssetRequiresLastWins) {
  const auto raw = testing::asset("reference/vader_lexicon.txt");
  EXPECT_THROW(parse_lexicon_file(raw), LexiconError);
  Lexicon lex = parse_lexicon_file(raw, {DuplicatePolicy::kLastWins});
  EXPECT_EQ(lex, testing::english_lexicon());
  // The one row whose stored mean disagrees with its own ratings.
  EXPECT_EQ(lint_rating_means(lex), std::vector<std::string>{"lmfao"});
}

TEST(ParseLexicon, FileNameBecomesLexiconName) {
  EXPECT_EQ(testing::english_lexicon().name(), "vader_lexicon");
  EXPECT_THROW(parse_lexicon_file("/nonexistent/lexicon.txt"), IoError);
}

TEST(Serialize, SortedFourColumns) {
  Lexicon lex("t");
  lex.insert({"zebra", 0.1, 0.0, {}});
  lex.insert({"apple", -1.25, 0.3, {-1, -1.5}});
  EXPECT_EQ(serialize(lex), "apple\t-1.25\t0.3\t[-1, -1.5]\nzebra\t0.1\t0\t[]\n");
  EXPECT_EQ(serialize(Lexicon{}), "");
}

TEST(Serialize, DerivedValueKeepsFullPrecision) {
  Lexicon lex("t");
  lex.insert({"para", -6.5 / 3.0, 0.0, {}});
  Lexicon back = parse(serialize(lex));
  EXPECT_EQ(back.find("para")->valence, -6.5 / 3.0);
  EXPECT_NE(back.find("para")->valence, -2.2);
}

TEST(Serialize, FileRoundTripIsAtomic) {
  testing::TempDir tmp;
  std::mt19937_64 rng(11);
  Lexicon lex = testing::random_lexicon(rng, 200, true);
  serialize_lexicon_file(lex, tmp / "lex.txt");
  EXPECT_EQ(parse_lexicon_file(tmp / "lex.txt"), lex);
  EXPECT_FALSE(std::filesystem::exists(tmp / "lex.txt.partial"));
  EXPECT_THROW(serialize_lexicon_file(lex, tmp / "missing" / "lex.txt"), IoError);
}

TEST(Serialize, RoundTripEnglishAsset) {
  const Lexicon& lex = testing::english_lexicon();
  EXPECT_EQ(parse(serialize(lex)), lex);
  EXPECT_EQ(serialize(lex), testing::read_file(testing::asset("vader_lexicon.txt")));
}

TEST(FormatRoundTrip, ShortestDigits) {
  EXPECT_EQ(format_round_trip(-2.2), "-2.2");
  EXPECT_EQ(format_round_trip(0.1 + 0.2), "0.30000000000000004");
  EXPECT_EQ(format_round_trip(2.0), "2");
}

TEST(ValidateEntry, Contract) {
  EXPECT_NO_THROW(validate_entry({"ok", 4.0, 0.0, {}}));
  EXPECT_THROW(validate_entry({"", 1.0, 0.0, {}}), LexiconError);
  EXPECT_THROW(validate_entry({"bad", -4.01, 0.0, {}}), LexiconError);
  EXPECT_THROW(validate_entry({"a\tb", 1.0, 0.0, {}}), LexiconError);
  EXPECT_THROW(validate_entry({"a", 1.0, -1.0, {}}), LexiconError);
}

TEST(Merge, OverrideReplacesSameSpelling) {
  Lexicon base("base"), aug("pidgin");
  base.insert({"tank", -0.6, 0.0, {}});
  base.insert({"good", 1.9, 0.0, {}});
  aug.insert({"tank", 1.9, 0.0, {}});
  aug.insert({"wahala", -2.0, 0.0, {}});
  Lexicon m = merge(base, aug, MergePolicy::kOverride);
  EXPECT_EQ(m.name(), "base+pidgin");
  EXPECT_DOUBLE_EQ(m.find("tank")->valence, 1.9);
  EXPECT_EQ(*m.find("good"), *base.find("good"));
  EXPECT_EQ(m.size(), 3u);
  EXPECT_DOUBLE_EQ(base.find("tank")->valence, -0.6);  // inputs untouched

  EXPECT_DOUBLE_EQ(merge(base, aug, MergePolicy::kKeepBase).find("tank")->valence,
                   -0.6);
  try {
    merge(base, aug, MergePolicy::kErrorOnConflict);
    FAIL() << "expected conflict";
  } catch (const MergeConflictError& e) {
    EXPECT_EQ(e.tokens(), std::vector<std::string>{"tank"});
  }
  auto collisions = find_collisions(base, aug);
  ASSERT_EQ(collisions.size(), 1u);
  EXPECT_EQ(collisions[0].token, "tank");
}

TEST(Merge, EmptySides) {
  Lexicon base = parse("a\t1\nb\t-2\n");
  EXPECT_EQ(merge(base, Lexicon{}), base);
  EXPECT_EQ(merge(Lexicon{}, base), base);
}

TEST(Merge, OverrideIsIdempotent) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Lexicon b = testing::random_lexicon(rng, 100);
    Lexicon a = testing::random_lexicon(rng, 20);
    for (const auto* e : b.sorted()) {
      if (a.size() >= 30) break;
      a.insert({e->token, 0.5, 0.0, {}});
    }
    Lexicon once = merge(b, a);
    EXPECT_EQ(merge(once, a), once);
  }
}

TEST(MergePolicyNames, ParseAndPrint) {
  for (auto p : {MergePolicy::kOverride, MergePolicy::kKeepBase,
                 MergePolicy::kErrorOnConflict}) {
    EXPECT_EQ(parse_merge_policy(to_string(p)), p);
  }
  EXPECT_THROW(parse_merge_policy("replace"), Error);
}

}  // namespace
}  // namespace naijasent
