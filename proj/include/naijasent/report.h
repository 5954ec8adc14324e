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

#ifndef NAIJASENT_REPORT_H_
#define NAIJASENT_REPORT_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "naijasent/corpus.h"

namespace naijasent {

// Indexed [gold][predicted] (or [before][after] for flips) in Label order.
using ConfusionMatrix = std::array<std::array<std::size_t, kLabelCount>, kLabelCount>;

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // gold count
};

struct LabelMetrics {
  std::size_t labeled = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
  ConfusionMatrix confusion{};
  std::array<ClassMetrics, kLabelCount> per_class{};
  // Averaged over classes that occur in gold or predictions.
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
};

struct LabelPair {
  Label gold;
  Label predicted;
};

// Empty input yields nullopt.
std::optional<LabelMetrics> compute_metrics(const std::vector<LabelPair>& pairs);

struct EvaluationReport {
  std::size_t corpus_size = 0;
  std::size_t gold_labeled = 0;
  // Absent when no row carries a gold label.
  std::optional<LabelMetrics> before;
  std::optional<LabelMetrics> after;
  ConfusionMatrix transitions{};  // [label_before][label_after], all rows
  std::size_t flipped = 0;        // rows with label_before != label_after
};

EvaluationReport evaluate(const std::vector<ComparisonRow>& rows);

// Metrics for a single scored corpus (the `eval` subcommand).
std::optional<LabelMetrics> evaluate_scored(
    const std::vector<ScoredDocument>& docs);

enum class ExportFormat { kJson, kCsv, kMarkdown };

ExportFormat parse_export_format(std::string_view name);

// Compounds print with 4 decimals. JSON carries the report and the rows;
// CSV and markdown carry the rows only, markdown in the column order
// text, before score, after score, before label, after label, gold.
std::string render_comparison(const EvaluationReport& report,
                              const std::vector<ComparisonRow>& rows,
                              ExportFormat format);
void export_report(const EvaluationReport& report,
                   const std::vector<ComparisonRow>& rows,
                   const std::filesystem::path& path, ExportFormat format);

std::string render_report_json(const EvaluationReport& report);
std::string render_metrics_json(const LabelMetrics& metrics);

// Human-readable summary: accuracies and non-zero flip transitions.
std::string report_summary(const EvaluationReport& report);

enum class BatchFormat { kJson, kJsonl, kCsv };

BatchFormat parse_batch_format(std::string_view name);

// One record per document in corpus order: id, text, negative, neutral,
// positive (3 decimals), compound (4 decimals), label, gold.
std::string render_scored(const std::vector<ScoredDocument>& docs,
                          BatchFormat format);

// Correctly rounded to `decimals` places from the exact binary value (ties
// to even), the same result printf("%.*f") gives.
double round_decimal(double value, int decimals);

}  // namespace naijasent

#endif  // NAIJASENT_REPORT_H_
