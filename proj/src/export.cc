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

#include <cstdlib>
#include <sstream>

#include "delimited.h"
#include "json.hpp"
#include "naijasent/atomic_file.h"
#include "naijasent/error.h"
#include "naijasent/report.h"
#include "text.h"

namespace naijasent {

using Json = nlohmann::ordered_json;

namespace {

// Corpus text is not guaranteed to be valid UTF-8; bad bytes become U+FFFD.
std::string dump(const Json& j, int indent) {
  return j.dump(indent, ' ', false, Json::error_handler_t::replace);
}

std::string compound_text(double compound) {
  return text::format_fixed(compound, 4);
}

Json gold_json(const std::optional<Label>& gold) {
  return gold ? Json(std::string(to_string(*gold))) : Json(nullptr);
}

std::string transition_name(std::size_t from, std::size_t to) {
  return std::string(to_string(kAllLabels[from])) + "->" +
         std::string(to_string(kAllLabels[to]));
}

Json matrix_json(const ConfusionMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) rows.push_back(Json(row));
  return rows;
}

Json metrics_json(const LabelMetrics& m) {
  Json j;
  j["labeled"] = m.labeled;
  j["correct"] = m.correct;
  j["accuracy"] = m.accuracy;
  j["confusion"] = {{"axes", "gold x predicted"},
                    {"labels", {"negative", "neutral", "positive"}},
                    {"matrix", matrix_json(m.confusion)}};
  Json per_class;
  for (std::size_t c = 0; c < kLabelCount; ++c) {
    const ClassMetrics& cm = m.per_class[c];
    per_class[std::string(to_string(kAllLabels[c]))] = {
        {"precision", cm.precision},
        {"recall", cm.recall},
        {"f1", cm.f1},
        {"support", cm.support}};
  }
  j["per_class"] = per_class;
  j["macro"] = {{"precision", m.macro_precision},
                {"recall", m.macro_recall},
                {"f1", m.macro_f1}};
  return j;
}

Json report_json(const EvaluationReport& r) {
  Json j;
  j["corpus_size"] = r.corpus_size;
  j["gold_labeled"] = r.gold_labeled;
  if (r.before) j["before"] = metrics_json(*r.before);
  if (r.after) j["after"] = metrics_json(*r.after);
  Json transitions;
  for (std::size_t a = 0; a < kLabelCount; ++a) {
    for (std::size_t b = 0; b < kLabelCount; ++b) {
      transitions[transition_name(a, b)] = r.transitions[a][b];
    }
  }
  j["flips"] = {{"total", r.flipped}, {"transitions", transitions}};
  return j;
}

std::string markdown_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n' || c == '\r') {
      out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

ExportFormat parse_export_format(std::string_view name) {
  std::string lower = text::ascii_lower(name);
  if (lower == "json") return ExportFormat::kJson;
  if (lower == "csv") return ExportFormat::kCsv;
  if (lower == "markdown" || lower == "md" || lower == "markdown-table") {
    return ExportFormat::kMarkdown;
  }
  throw Error("unknown export format '" + std::string(name) +
              "' (expected json, csv or markdown)");
}

BatchFormat parse_batch_format(std::string_view name) {
  std::string lower = text::ascii_lower(name);
  if (lower == "json") return BatchFormat::kJson;
  if (lower == "jsonl") return BatchFormat::kJsonl;
  if (lower == "csv") return BatchFormat::kCsv;
  throw Error("unknown output format '" + std::string(name) +
              "' (expected json, jsonl or csv)");
}

double round_decimal(double value, int decimals) {
  return std::strtod(text::format_fixed(value, decimals).c_str(), nullptr);
}

std::string render_comparison(const EvaluationReport& report,
                              const std::vector<ComparisonRow>& rows,
                              ExportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ExportFormat::kJson: {
      Json j;
      j["report"] = report_json(report);
      Json arr = Json::array();
      for (const auto& row : rows) {
        arr.push_back({{"id", row.id},
                       {"text", row.text},
                       {"compound_before", compound_text(row.compound_before)},
                       {"compound_after", compound_text(row.compound_after)},
                       {"label_before", to_string(row.label_before)},
                       {"label_after", to_string(row.label_after)},
                       {"gold", gold_json(row.gold)}});
      }
      j["rows"] = std::move(arr);
      out << dump(j, 2) << '\n';
      break;
    }
    case ExportFormat::kCsv:
      out << "id,text,compound_before,compound_after,label_before,"
             "label_after,gold\n";
      for (const auto& row : rows) {
        out << delimited::quote(row.id, ',') << ','
            << delimited::quote(row.text, ',') << ','
            << compound_text(row.compound_before) << ','
            << compound_text(row.compound_after) << ','
            << to_string(row.label_before) << ',' << to_string(row.label_after)
            << ',' << (row.gold ? to_string(*row.gold) : "") << '\n';
      }
      break;
    case ExportFormat::kMarkdown:
      out << "| Text | Compound Before | Compound After | Label Before | "
             "Label After | Gold Label |\n"
          << "|---|---:|---:|---|---|---|\n";
      for (const auto& row : rows) {
        out << "| " << markdown_cell(row.text) << " | "
            << compound_text(row.compound_before) << " | "
            << compound_text(row.compound_after) << " | "
            << to_string(row.label_before) << " | "
            << to_string(row.label_after) << " | "
            << (row.gold ? to_string(*row.gold) : "") << " |\n";
      }
      break;
  }
  return out.str();
}

void export_report(const EvaluationReport& report,
                   const std::vector<ComparisonRow>& rows,
                   const std::filesystem::path& path, ExportFormat format) {
  AtomicFile file(path);
  file.stream() << render_comparison(report, rows, format);
  file.commit();
}

std::string render_report_json(const EvaluationReport& report) {
  return dump(report_json(report), 2) + "\n";
}

std::string render_metrics_json(const LabelMetrics& metrics) {
  return dump(metrics_json(metrics), 2) + "\n";
}

std::string report_summary(const EvaluationReport& report) {
  std::ostringstream out;
  out << "documents: " << report.corpus_size << '\n'
      << "gold-labeled: " << report.gold_labeled << '\n';
  auto accuracy = [&](const char* name, const std::optional<LabelMetrics>& m) {
    if (!m) return;
    out << "accuracy " << name << ": " << text::format_fixed(m->accuracy, 4)
        << " (" << m->correct << '/' << m->labeled << ")\n"
        << "macro-f1 " << name << ": " << text::format_fixed(m->macro_f1, 4)
        << '\n';
  };
  accuracy("before", report.before);
  accuracy("after", report.after);
  out << "flips: " << report.flipped << '\n';
  for (std::size_t a = 0; a < kLabelCount; ++a) {
    for (std::size_t b = 0; b < kLabelCount; ++b) {
      if (a != b && report.transitions[a][b] > 0) {
        out << "  " << transition_name(a, b) << ": " << report.transitions[a][b]
            << '\n';
      }
    }
  }
  return out.str();
}

std::string render_scored(const std::vector<ScoredDocument>& docs,
                          BatchFormat format) {
  auto record = [](const ScoredDocument& d) {
    return Json{{"id", d.id},
                {"text", d.text},
                {"negative", round_decimal(d.scores.negative, 3)},
                {"neutral", round_decimal(d.scores.neutral, 3)},
                {"positive", round_decimal(d.scores.positive, 3)},
                {"compound", round_decimal(d.scores.compound, 4)},
                {"label", to_string(d.label)},
                {"gold", gold_json(d.gold)}};
  };
  std::ostringstream out;
  switch (format) {
    case BatchFormat::kJson: {
      Json arr = Json::array();
      for (const auto& d : docs) arr.push_back(record(d));
      out << dump(arr, 2) << '\n';
      break;
    }
    case BatchFormat::kJsonl:
      for (const auto& d : docs) out << dump(record(d), -1) << '\n';
      break;
    case BatchFormat::kCsv:
      out << "id,text,negative,neutral,positive,compound,label,gold\n";
      for (const auto& d : docs) {
        out << delimited::quote(d.id, ',') << ','
            << delimited::quote(d.text, ',') << ','
            << text::format_fixed(d.scores.negative, 3) << ','
            << text::format_fixed(d.scores.neutral, 3) << ','
            << text::format_fixed(d.scores.positive, 3) << ','
            << text::format_fixed(d.scores.compound, 4) << ','
            << to_string(d.label) << ','
            << (d.gold ? to_string(*d.gold) : "") << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace naijasent
