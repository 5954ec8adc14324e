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

#include <cstddef>

#include "naijasent/report.h"

namespace naijasent {

namespace {

std::size_t index_of(Label label) { return static_cast<std::size_t>(label); }

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::optional<LabelMetrics> compute_metrics(
    const std::vector<LabelPair>& pairs) {
  if (pairs.empty()) return std::nullopt;
  LabelMetrics m;
  m.labeled = pairs.size();
  for (const auto& p : pairs) {
    ++m.confusion[index_of(p.gold)][index_of(p.predicted)];
    if (p.gold == p.predicted) ++m.correct;
  }
  m.accuracy = ratio(m.correct, m.labeled);

  std::size_t active = 0;
  for (std::size_t c = 0; c < kLabelCount; ++c) {
    std::size_t tp = m.confusion[c][c];
    std::size_t gold = 0;
    std::size_t predicted = 0;
    for (std::size_t k = 0; k < kLabelCount; ++k) {
      gold += m.confusion[c][k];
      predicted += m.confusion[k][c];
    }
    ClassMetrics& cm = m.per_class[c];
    cm.support = gold;
    cm.precision = ratio(tp, predicted);
    cm.recall = ratio(tp, gold);
    cm.f1 = cm.precision + cm.recall > 0.0
                ? 2.0 * cm.precision * cm.recall / (cm.precision + cm.recall)
                : 0.0;
    if (gold > 0 || predicted > 0) {
      ++active;
      m.macro_precision += cm.precision;
      m.macro_recall += cm.recall;
      m.macro_f1 += cm.f1;
    }
  }
  m.macro_precision /= static_cast<double>(active);
  m.macro_recall /= static_cast<double>(active);
  m.macro_f1 /= static_cast<double>(active);
  return m;
}

EvaluationReport evaluate(const std::vector<ComparisonRow>& rows) {
  EvaluationReport report;
  report.corpus_size = rows.size();
  std::vector<LabelPair> before;
  std::vector<LabelPair> after;
  for (const auto& row : rows) {
    ++report.transitions[index_of(row.label_before)][index_of(row.label_after)];
    if (row.label_before != row.label_after) ++report.flipped;
    if (row.gold) {
      before.push_back({*row.gold, row.label_before});
      after.push_back({*row.gold, row.label_after});
    }
  }
  report.gold_labeled = before.size();
  report.before = compute_metrics(before);
  report.after = compute_metrics(after);
  return report;
}

std::optional<LabelMetrics> evaluate_scored(
    const std::vector<ScoredDocument>& docs) {
  std::vector<LabelPair> pairs;
  for (const auto& d : docs) {
    if (d.gold) pairs.push_back({*d.gold, d.label});
  }
  return compute_metrics(pairs);
}

}  // namespace naijasent
