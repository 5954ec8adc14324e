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

#include "naijasent/cli.h"

#include <gtest/gtest.h>

#include "json.hpp"
#include "support/test_support.h"

namespace naijasent {
namespace {

namespace fs = std::filesystem;
using testing::run_cli;
using testing::test_data;

std::string english() { return testing::asset("vader_lexicon.txt").string(); }

TEST(Cli, NoSubcommandIsUsageError) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
}

TEST(Cli, HelpOnEverySubcommand) {
  auto top = run_cli({"--help"});
  EXPECT_EQ(top.code, kExitOk);
  for (const char* cmd : {"score", "batch", "lexicon-derive", "lexicon-merge",
                          "eval", "compare"}) {
    auto r = run_cli({cmd, "--help"});
    EXPECT_EQ(r.code, kExitOk) << cmd;
    EXPECT_NE(r.out.find("--"), std::string::npos) << cmd;
  }
  auto derive = run_cli({"lexicon-derive", "--help"}).out;
  for (const char* flag : {"--mapping", "--source-lexicon", "--out", "--strict-sign"}) {
    EXPECT_NE(derive.find(flag), std::string::npos) << flag;
  }
}

TEST(CliScore, PrintsJson) {
  auto r = run_cli({"score", "--text", "Na to delete am", "--lexicon", english()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["compound"], 0.0);
  EXPECT_EQ(j["neutral"], 1.0);
  r = run_cli({"score", "--text", "Abed share your insight with me", "--lexicon",
               english()});
  EXPECT_EQ(nlohmann::json::parse(r.out)["compound"], 0.296);
}

TEST(CliScore, EmptyTextAndErrors) {
  auto r = run_cli({"score", "--text", "", "--lexicon", english()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "{\"negative\":0.0,\"neutral\":0.0,\"positive\":0.0,\"compound\":0.0}\n");
  EXPECT_EQ(run_cli({"score", "--text", "hi"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"score", "--text", "hi", "--lexicon", english(), "--bogus"}).code,
            kExitUsage);
  testing::TempDir tmp;
  testing::write_file(tmp / "bad.txt", "good\t1.9\nbad\tx\n");
  r = run_cli({"score", "--text", "hi", "--lexicon", (tmp / "bad.txt").string()});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run_cli({"score", "--text", "hi", "--lexicon", "/nonexistent"}).code,
            kExitParse);
  testing::write_file(tmp / "cfg.conf", "alpha = -1\n");
  EXPECT_EQ(run_cli({"score", "--text", "hi", "--lexicon", english(), "--config",
                     (tmp / "cfg.conf").string()}).code,
            kExitParse);
}

TEST(CliBatch, ExpertTweetsBeforeScores) {
  testing::TempDir tmp;
  auto r = run_cli({"batch", "--corpus", test_data("expert_tweets.csv").string(),
                    "--lexicon", english(), "--out", (tmp / "s.jsonl").string(),
                    "--format", "jsonl"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(testing::read_file(tmp / "s.jsonl"));
  std::vector<double> compounds;
  for (std::string line; std::getline(in, line);) {
    compounds.push_back(nlohmann::json::parse(line)["compound"]);
  }
  EXPECT_EQ(compounds, (std::vector<double>{-0.1154, 0, 0, 0, 0, 0.296, 0.34}));
}

TEST(CliBatch, EmptyCorpusAndMalformedRow) {
  testing::TempDir tmp;
  testing::write_file(tmp / "empty.csv", "text,label\n");
  auto r = run_cli({"batch", "--corpus", (tmp / "empty.csv").string(), "--lexicon",
                    english(), "--out", (tmp / "o.csv").string(), "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(testing::read_file(tmp / "o.csv"),
            "id,text,negative,neutral,positive,compound,label,gold\n");

  testing::write_file(tmp / "bad.csv", "text,label\nok,positive\nfine,happy\n");
  r = run_cli({"batch", "--corpus", (tmp / "bad.csv").string(), "--lexicon",
               english(), "--out", (tmp / "o2.json").string()});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find("row 2"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(tmp / "o2.json"));
  EXPECT_FALSE(fs::exists(tmp / "o2.json.partial"));
  EXPECT_EQ(run_cli({"batch", "--corpus", (tmp / "empty.csv").string(), "--lexicon",
                     english(), "--out", (tmp / "o.csv").string(), "--format", "xml"})
                .code,
            kExitUsage);
}

TEST(CliBatch, UnwritableOutput) {
  auto r = run_cli({"batch", "--corpus", test_data("expert_tweets.csv").string(),
                    "--lexicon", english(), "--out", "/nonexistent/dir/o.json"});
  EXPECT_EQ(r.code, kExitIo);
}

TEST(CliDerive, ParaFromLookup) {
  testing::TempDir tmp;
  testing::write_file(tmp / "m.tsv", "para\tangry,annoyed,rage\n");
  auto r = run_cli({"lexicon-derive", "--mapping", (tmp / "m.tsv").string(),
                    "--source-lexicon", english(), "--out", (tmp / "p.txt").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "para\t-2.1667\t-2.2\tangry(-2.3),annoyed(-1.6),rage(-2.6)\n");
  EXPECT_EQ(testing::read_file(tmp / "p.txt"),
            "para\t-2.1666666666666665\t0\t[]\n");
}

TEST(CliDerive, EmptyMapping) {
  testing::TempDir tmp;
  testing::write_file(tmp / "m.tsv", "");
  auto r = run_cli({"lexicon-derive", "--mapping", (tmp / "m.tsv").string(),
                    "--out", (tmp / "p.txt").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(testing::read_file(tmp / "p.txt"), "");
}

TEST(CliDerive, UnresolvedTokens) {
  testing::TempDir tmp;
  testing::write_file(tmp / "m.tsv", "para\tangry,qwertyzz\n");
  auto r = run_cli({"lexicon-derive", "--mapping", (tmp / "m.tsv").string(),
                    "--source-lexicon", english(), "--out", (tmp / "p.txt").string()});
  EXPECT_EQ(r.code, kExitUnresolved);
  EXPECT_NE(r.err.find("para:qwertyzz"), std::string::npos);
  EXPECT_FALSE(fs::exists(tmp / "p.txt"));
}

TEST(CliDerive, StrictSign) {
  testing::TempDir tmp;
  std::vector<std::string> args{"lexicon-derive", "--mapping",
                                test_data("multi_meaning_printed.tsv").string(), "--out",
                                (tmp / "p.txt").string()};
  auto r = run_cli(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("gbege"), std::string::npos);
  fs::remove(tmp / "p.txt");
  args.push_back("--strict-sign");
  r = run_cli(args);
  EXPECT_EQ(r.code, kExitPolicy);
  EXPECT_FALSE(fs::exists(tmp / "p.txt"));
}

TEST(CliMerge, PoliciesAndCollisionReport) {
  testing::TempDir tmp;
  testing::write_file(tmp / "base.txt", "tank\t-0.6\ngood\t1.9\n");
  testing::write_file(tmp / "aug.txt", "tank\t1.9\nwahala\t-2\n");
  std::vector<std::string> args{"lexicon-merge", "--base", (tmp / "base.txt").string(),
                                "--augmentation", (tmp / "aug.txt").string(),
                                "--out", (tmp / "m.txt").string()};
  auto r = run_cli(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("collision: tank"), std::string::npos);
  EXPECT_EQ(testing::read_file(tmp / "m.txt"),
            "good\t1.9\t0\t[]\ntank\t1.9\t0\t[]\nwahala\t-2\t0\t[]\n");

  fs::remove(tmp / "m.txt");
  args.insert(args.end(), {"--policy", "error-on-conflict"});
  r = run_cli(args);
  EXPECT_EQ(r.code, kExitPolicy);
  EXPECT_NE(r.err.find("tank"), std::string::npos);
  EXPECT_FALSE(fs::exists(tmp / "m.txt"));
  args.back() = "replace";
  EXPECT_EQ(run_cli(args).code, kExitUsage);
}

TEST(CliMerge, EmptyAugmentationRoundTripsBase) {
  testing::TempDir tmp;
  testing::write_file(tmp / "empty.txt", "");
  auto r = run_cli({"lexicon-merge", "--base", english(), "--augmentation",
                    (tmp / "empty.txt").string(), "--out", (tmp / "m.txt").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(testing::read_file(tmp / "m.txt"), testing::read_file(english()));
  EXPECT_EQ(run_cli({"lexicon-merge", "--base",
                     testing::asset("reference/vader_lexicon.txt").string(),
                     "--augmentation", (tmp / "empty.txt").string(), "--out",
                     (tmp / "m2.txt").string()})
                .code,
            kExitParse);
  r = run_cli({"lexicon-merge", "--base",
               testing::asset("reference/vader_lexicon.txt").string(),
               "--base-duplicates", "last-wins", "--augmentation",
               (tmp / "empty.txt").string(), "--out", (tmp / "m2.txt").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(testing::read_file(tmp / "m2.txt"), testing::read_file(english()));
}

TEST(CliEval, MetricsJson) {
  auto r = run_cli({"eval", "--corpus", test_data("expert_tweets.csv").string(),
                    "--lexicon", english()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["labeled"], 7);
  EXPECT_EQ(j["correct"], 1);
}

TEST(CliCompare, ExpertTweetsMarkdown) {
  testing::TempDir tmp;
  auto merged = run_cli({"lexicon-merge", "--base", english(), "--augmentation",
                         test_data("delete_augmentation.txt").string(), "--out",
                         (tmp / "aug.txt").string()});
  ASSERT_EQ(merged.code, kExitOk);
  auto r = run_cli({"compare", "--corpus", test_data("expert_tweets.csv").string(), "--base",
                    english(), "--augmented", (tmp / "aug.txt").string(), "--out",
                    (tmp / "t.md").string(), "--report", (tmp / "r.json").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("accuracy before: 0.1429 (1/7)"), std::string::npos);
  EXPECT_NE(r.out.find("flips: 1"), std::string::npos);
  std::string md = testing::read_file(tmp / "t.md");
  EXPECT_NE(md.find("| Na to delete am | 0.0000 | -0.6908 | neutral | negative | negative |"),
            std::string::npos);
  auto report = nlohmann::json::parse(testing::read_file(tmp / "r.json"));
  EXPECT_EQ(report["flips"]["total"], 1);
}

TEST(CliCompare, SameLexiconNoFlipsAndThresholds) {
  testing::TempDir tmp;
  auto r = run_cli({"compare", "--corpus", test_data("expert_tweets.csv").string(), "--base",
                    english(), "--augmented", english(), "--out",
                    (tmp / "t.csv").string(), "--thresholds", "0.5,-0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("flips: 0"), std::string::npos);
  // at +-0.5 every published before-score is neutral
  EXPECT_NE(r.out.find("accuracy before: 0.0000 (0/7)"), std::string::npos);
  EXPECT_EQ(run_cli({"compare", "--corpus", test_data("expert_tweets.csv").string(),
                     "--base", english(), "--augmented", english(), "--out",
                     (tmp / "t.csv").string(), "--thresholds", "-0.5,0.5"})
                .code,
            kExitUsage);
}

TEST(CliCompare, Deterministic) {
  testing::TempDir tmp;
  testing::write_file(tmp / "c.csv", testing::synthetic_corpus_csv(2000, 4));
  for (const char* name : {"a.json", "b.json"}) {
    ASSERT_EQ(run_cli({"compare", "--corpus", (tmp / "c.csv").string(), "--base",
                       english(), "--augmented", english(), "--out",
                       (tmp / name).string()})
                  .code,
              kExitOk);
  }
  EXPECT_EQ(testing::read_file(tmp / "a.json"), testing::read_file(tmp / "b.json"));
}

}  // namespace
}  // namespace naijasent
