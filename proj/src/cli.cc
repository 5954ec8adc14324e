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

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "naijasent/atomic_file.h"
#include "naijasent/corpus.h"
#include "naijasent/derivation.h"
#include "naijasent/engine.h"
#include "naijasent/error.h"
#include "naijasent/lexicon.h"
#include "naijasent/report.h"
#include "text.h"

namespace naijasent {

namespace fs = std::filesystem;

namespace {

// Failure that already carries its exit code and message.
struct CommandError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) {
  throw CommandError{code, std::move(message)};
}

// Runs an input-loading step; any library error becomes a parse failure.
template <typename Fn>
auto load(const std::string& what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    fail(kExitParse, what + ": " + e.what());
  }
}

void write_output(const fs::path& path, const std::string& content) {
  try {
    AtomicFile file(path);
    file.stream() << content;
    file.commit();
  } catch (const IoError& e) {
    fail(kExitIo, e.what());
  }
}

EngineConfig load_config(const std::string& path) {
  if (path.empty()) return {};
  return load("config " + path, [&] { return load_engine_config(path); });
}

Lexicon load_lexicon(const std::string& path,
                     DuplicatePolicy duplicates = DuplicatePolicy::kError) {
  return load("lexicon " + path, [&] {
    return parse_lexicon_file(path, ParseOptions{duplicates});
  });
}

std::vector<LabeledDocument> load_documents(const std::string& path,
                                            const std::string& format_name) {
  CorpusFormat format;
  try {
    if (!format_name.empty()) {
      format = parse_corpus_format(format_name);
    } else {
      format = corpus_format_for(path).value_or(CorpusFormat::kCsv);
    }
  } catch (const Error& e) {
    fail(kExitUsage, e.what());
  }
  return load("corpus " + path, [&] { return load_corpus(path, format); });
}

Thresholds thresholds_from(const std::string& spec) {
  if (spec.empty()) return {};
  try {
    return parse_thresholds(spec);
  } catch (const Error& e) {
    fail(kExitUsage, std::string("--thresholds: ") + e.what());
  }
}

template <typename T, typename Parse>
T parse_flag(const std::string& flag, const std::string& value, Parse parse) {
  try {
    return parse(value);
  } catch (const Error& e) {
    fail(kExitUsage, flag + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------

struct ScoreArgs {
  std::string text;
  std::string lexicon;
  std::string config;
};

int run_score(const ScoreArgs& a, std::ostream& out) {
  EngineConfig cfg = load_config(a.config);
  Lexicon lexicon = load_lexicon(a.lexicon);
  SentimentScores s = polarity_scores(a.text, lexicon, cfg);
  nlohmann::ordered_json j = {{"negative", round_decimal(s.negative, 3)},
                              {"neutral", round_decimal(s.neutral, 3)},
                              {"positive", round_decimal(s.positive, 3)},
                              {"compound", round_decimal(s.compound, 4)}};
  out << j.dump() << '\n';
  return kExitOk;
}

struct BatchArgs {
  std::string corpus;
  std::string corpus_format;
  std::string lexicon;
  std::string out;
  std::string format = "json";
  std::string config;
  std::string thresholds;
  unsigned threads = 0;
};

int run_batch(const BatchArgs& a, std::ostream& out) {
  BatchFormat format = parse_flag<BatchFormat>("--format", a.format,
                                               parse_batch_format);
  Thresholds thresholds = thresholds_from(a.thresholds);
  EngineConfig cfg = load_config(a.config);
  Lexicon lexicon = load_lexicon(a.lexicon);
  auto docs = load_documents(a.corpus, a.corpus_format);
  auto scored = score_corpus(docs, lexicon, cfg, thresholds, a.threads);
  write_output(a.out, render_scored(scored, format));
  out << "scored " << scored.size() << " documents -> " << a.out << '\n';
  return kExitOk;
}

struct DeriveArgs {
  std::string mapping;
  std::string source_lexicon;
  std::string out;
  bool strict_sign = false;
};

int run_derive(const DeriveArgs& a, std::ostream& out, std::ostream& err) {
  auto mapping = load("mapping " + a.mapping,
                      [&] { return parse_mapping_file(a.mapping); });
  std::optional<Lexicon> source;
  if (!a.source_lexicon.empty()) source = load_lexicon(a.source_lexicon);
  DerivationOutcome outcome = load("mapping " + a.mapping, [&] {
    return derive_from_mapping(mapping, source ? &*source : nullptr);
  });
  if (!outcome.unresolved.empty()) {
    std::string msg = "unresolved English tokens (pidgin:english):";
    for (const auto& u : outcome.unresolved) msg += "\n  " + u;
    fail(kExitUnresolved, msg);
  }
  bool sign_violation = false;
  for (const auto& issue : outcome.issues) {
    err << "warning: " << issue.message << '\n';
    sign_violation |= issue.kind == DerivationIssue::Kind::kMixedSigns;
  }
  if (a.strict_sign && sign_violation) {
    fail(kExitPolicy, "mixed-sign sources rejected by --strict-sign");
  }
  Lexicon lexicon = load("mapping " + a.mapping, [&] {
    return to_lexicon(outcome.records, fs::path(a.out).stem().string());
  });
  std::ostringstream body;
  write_lexicon(lexicon, body);
  write_output(a.out, body.str());
  for (const auto& r : outcome.records) {
    out << r.pidgin_token << '\t' << text::format_fixed(r.derived_valence, 4)
        << '\t' << display_valence(r.derived_valence) << '\t';
    for (std::size_t i = 0; i < r.sources.size(); ++i) {
      if (i > 0) out << ',';
      out << r.sources[i].token << '('
          << format_round_trip(r.sources[i].valence) << ')';
    }
    out << '\n';
  }
  return kExitOk;
}

struct MergeArgs {
  std::string base;
  std::string augmentation;
  std::string policy = "override";
  std::string base_duplicates = "error";
  std::string out;
};

int run_merge(const MergeArgs& a, std::ostream& out, std::ostream& err) {
  MergePolicy policy =
      parse_flag<MergePolicy>("--policy", a.policy, parse_merge_policy);
  DuplicatePolicy dups = DuplicatePolicy::kError;
  if (a.base_duplicates == "last-wins") {
    dups = DuplicatePolicy::kLastWins;
  } else if (a.base_duplicates != "error") {
    fail(kExitUsage, "--base-duplicates must be 'error' or 'last-wins'");
  }
  Lexicon base = load_lexicon(a.base, dups);
  Lexicon aug = load_lexicon(a.augmentation);
  auto collisions = find_collisions(base, aug);
  for (const auto& c : collisions) {
    err << "collision: " << c.token << " base=" << format_round_trip(c.base_valence)
        << " augmentation=" << format_round_trip(c.augmentation_valence)
        << " policy=" << to_string(policy) << '\n';
  }
  Lexicon merged;
  try {
    merged = merge(base, aug, policy);
  } catch (const MergeConflictError& e) {
    fail(kExitPolicy, e.what());
  }
  std::ostringstream body;
  write_lexicon(merged, body);
  write_output(a.out, body.str());
  out << "merged " << base.size() << " base + " << aug.size()
      << " augmentation entries (" << collisions.size() << " collisions) -> "
      << merged.size() << " entries\n";
  return kExitOk;
}

struct EvalArgs {
  std::string corpus;
  std::string corpus_format;
  std::string lexicon;
  std::string out;
  std::string config;
  std::string thresholds;
  unsigned threads = 0;
};

int run_eval(const EvalArgs& a, std::ostream& out) {
  Thresholds thresholds = thresholds_from(a.thresholds);
  EngineConfig cfg = load_config(a.config);
  Lexicon lexicon = load_lexicon(a.lexicon);
  auto docs = load_documents(a.corpus, a.corpus_format);
  auto scored = score_corpus(docs, lexicon, cfg, thresholds, a.threads);
  auto metrics = evaluate_scored(scored);
  std::string body;
  if (metrics) {
    body = render_metrics_json(*metrics);
  } else {
    body = "{\n  \"labeled\": 0\n}\n";
  }
  if (!a.out.empty()) {
    write_output(a.out, body);
  } else {
    out << body;
  }
  if (!a.out.empty()) {
    out << "documents: " << scored.size() << '\n';
    if (metrics) {
      out << "accuracy: " << text::format_fixed(metrics->accuracy, 4) << " ("
          << metrics->correct << '/' << metrics->labeled << ")\n";
    }
  }
  return kExitOk;
}

struct CompareArgs {
  std::string corpus;
  std::string corpus_format;
  std::string base;
  std::string augmented;
  std::string out;
  std::string format;
  std::string report;
  std::string config;
  std::string thresholds;
  unsigned threads = 0;
};

int run_compare(const CompareArgs& a, std::ostream& out) {
  ExportFormat format = ExportFormat::kJson;
  if (!a.format.empty()) {
    format = parse_flag<ExportFormat>("--format", a.format, parse_export_format);
  } else {
    std::string ext = text::ascii_lower(fs::path(a.out).extension().string());
    if (ext == ".csv") format = ExportFormat::kCsv;
    if (ext == ".md") format = ExportFormat::kMarkdown;
  }
  Thresholds thresholds = thresholds_from(a.thresholds);
  EngineConfig cfg = load_config(a.config);
  Lexicon base = load_lexicon(a.base);
  Lexicon augmented = load_lexicon(a.augmented);
  auto docs = load_documents(a.corpus, a.corpus_format);
  auto rows =
      compare_lexicons(docs, base, augmented, cfg, thresholds, a.threads);
  EvaluationReport report = evaluate(rows);
  write_output(a.out, render_comparison(report, rows, format));
  if (!a.report.empty()) write_output(a.report, render_report_json(report));
  out << report_summary(report);
  return kExitOk;
}

void add_config_flags(CLI::App* cmd, std::string& config,
                      std::string& thresholds) {
  cmd->add_option("--config", config,
                  "Engine constants file (key = value lines)");
  cmd->add_option("--thresholds", thresholds,
                  "Label cutoffs as 'positive,negative' (default 0.05,-0.05)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Lexicon and rule based sentiment scoring for Nigerian Pidgin and "
      "English text, with lexicon derivation, merging and corpus "
      "comparison.",
      "naijasent"};
  app.require_subcommand(1);

  ScoreArgs score;
  auto* score_cmd =
      app.add_subcommand("score", "Score one text and print JSON scores");
  score_cmd->add_option("--text", score.text, "Text to score")->required();
  score_cmd->add_option("--lexicon", score.lexicon, "Lexicon file")->required();
  score_cmd->add_option("--config", score.config,
                        "Engine constants file (key = value lines)");

  BatchArgs batch;
  auto* batch_cmd = app.add_subcommand("batch", "Score every corpus document");
  batch_cmd->add_option("--corpus", batch.corpus, "Corpus file")->required();
  batch_cmd->add_option("--corpus-format", batch.corpus_format,
                        "csv, tsv or jsonl (default: from extension)");
  batch_cmd->add_option("--lexicon", batch.lexicon, "Lexicon file")->required();
  batch_cmd->add_option("--out", batch.out, "Output file")->required();
  batch_cmd->add_option("--format", batch.format,
                        "Output format: json, jsonl or csv")
      ->capture_default_str();
  add_config_flags(batch_cmd, batch.config, batch.thresholds);
  batch_cmd->add_option("--threads", batch.threads,
                        "Scoring threads (0 = all cores)");

  DeriveArgs derive;
  auto* derive_cmd = app.add_subcommand(
      "lexicon-derive",
      "Average English valences into Pidgin lexicon entries");
  derive_cmd
      ->add_option("--mapping", derive.mapping,
                   "Lines of pidgin<TAB>english1,english2,... with optional "
                   "word(valence) sources and a published-average column")
      ->required();
  derive_cmd->add_option("--source-lexicon", derive.source_lexicon,
                         "Lexicon supplying the English valences");
  derive_cmd->add_option("--out", derive.out, "Derived lexicon file")
      ->required();
  derive_cmd->add_flag("--strict-sign", derive.strict_sign,
                       "Fail (exit 5) when a token's sources disagree in sign");

  MergeArgs mergea;
  auto* merge_cmd =
      app.add_subcommand("lexicon-merge", "Merge an augmentation lexicon");
  merge_cmd->add_option("--base", mergea.base, "Base lexicon")->required();
  merge_cmd->add_option("--augmentation", mergea.augmentation,
                        "Augmentation lexicon")
      ->required();
  merge_cmd->add_option("--policy", mergea.policy,
                        "override, keep-base or error-on-conflict")
      ->capture_default_str();
  merge_cmd->add_option("--base-duplicates", mergea.base_duplicates,
                        "error, or last-wins to ingest lexicons with "
                        "repeated tokens")
      ->capture_default_str();
  merge_cmd->add_option("--out", mergea.out, "Merged lexicon file")->required();

  EvalArgs evala;
  auto* eval_cmd = app.add_subcommand(
      "eval", "Score a labeled corpus and report agreement with gold labels");
  eval_cmd->add_option("--corpus", evala.corpus, "Corpus file")->required();
  eval_cmd->add_option("--corpus-format", evala.corpus_format,
                       "csv, tsv or jsonl (default: from extension)");
  eval_cmd->add_option("--lexicon", evala.lexicon, "Lexicon file")->required();
  eval_cmd->add_option("--out", evala.out,
                       "Metrics JSON file (default: standard output)");
  add_config_flags(eval_cmd, evala.config, evala.thresholds);
  eval_cmd->add_option("--threads", evala.threads,
                       "Scoring threads (0 = all cores)");

  CompareArgs cmp;
  auto* compare_cmd = app.add_subcommand(
      "compare", "Score a corpus with base and augmented lexicons");
  compare_cmd->add_option("--corpus", cmp.corpus, "Corpus file")->required();
  compare_cmd->add_option("--corpus-format", cmp.corpus_format,
                          "csv, tsv or jsonl (default: from extension)");
  compare_cmd->add_option("--base", cmp.base, "Base lexicon")->required();
  compare_cmd->add_option("--augmented", cmp.augmented, "Augmented lexicon")
      ->required();
  compare_cmd->add_option("--out", cmp.out, "Row export file")->required();
  compare_cmd->add_option(
      "--format", cmp.format,
      "json, csv or markdown (default: from extension, else json)");
  compare_cmd->add_option("--report", cmp.report,
                          "Also write the evaluation report as JSON here");
  add_config_flags(compare_cmd, cmp.config, cmp.thresholds);
  compare_cmd->add_option("--threads", cmp.threads,
                          "Scoring threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*score_cmd) return run_score(score, out);
    if (*batch_cmd) return run_batch(batch, out);
    if (*derive_cmd) return run_derive(derive, out, err);
    if (*merge_cmd) return run_merge(mergea, out, err);
    if (*eval_cmd) return run_eval(evala, out);
    if (*compare_cmd) return run_compare(cmp, out);
  } catch (const CommandError& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  }
  return kExitUsage;
}

}  // namespace naijasent
