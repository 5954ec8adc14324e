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

#include "naijasent/corpus.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "json.hpp"

#include "delimited.h"
#include "naijasent/error.h"
#include "text.h"

namespace naijasent {

std::string_view to_string(Label label) {
  switch (label) {
    case Label::kNegative:
      return "negative";
    case Label::kNeutral:
      return "neutral";
    case Label::kPositive:
      return "positive";
  }
  return "neutral";
}

std::optional<Label> parse_label(std::string_view text) {
  std::string lower = text::ascii_lower(text::trim(text));
  if (lower == "negative") return Label::kNegative;
  if (lower == "neutral") return Label::kNeutral;
  if (lower == "positive") return Label::kPositive;
  return std::nullopt;
}

CorpusFormat parse_corpus_format(std::string_view name) {
  std::string lower = text::ascii_lower(name);
  if (lower == "csv") return CorpusFormat::kCsv;
  if (lower == "tsv") return CorpusFormat::kTsv;
  if (lower == "jsonl") return CorpusFormat::kJsonl;
  throw Error("unknown corpus format '" + std::string(name) +
              "' (expected csv, tsv or jsonl)");
}

std::optional<CorpusFormat> corpus_format_for(const std::filesystem::path& p) {
  std::string ext = text::ascii_lower(p.extension().string());
  if (ext == ".csv") return CorpusFormat::kCsv;
  if (ext == ".tsv" || ext == ".tab") return CorpusFormat::kTsv;
  if (ext == ".jsonl" || ext == ".ndjson") return CorpusFormat::kJsonl;
  return std::nullopt;
}

namespace {

// Shared validation for both input paths.
class CorpusBuilder {
 public:
  void add(std::size_t row, std::optional<std::string> id, std::string text,
           std::string_view label) {
    if (text.empty()) throw CorpusError("empty text", row);
    LabeledDocument doc;
    doc.text = std::move(text);
    if (!text::trim(label).empty()) {
      doc.gold = parse_label(label);
      if (!doc.gold) {
        throw CorpusError("unknown label '" + std::string(label) + "'", row);
      }
    }
    doc.id = id && !id->empty() ? std::move(*id) : "row-" + std::to_string(row);
    if (!ids_.insert(doc.id).second) {
      throw CorpusError("duplicate id '" + doc.id + "'", row);
    }
    docs_.push_back(std::move(doc));
  }

  std::vector<LabeledDocument> finish() { return std::move(docs_); }

 private:
  std::vector<LabeledDocument> docs_;
  std::unordered_set<std::string> ids_;
};

std::vector<LabeledDocument> load_delimited(std::string_view data,
                                            char delimiter) {
  if (data.starts_with("\xEF\xBB\xBF")) data.remove_prefix(3);
  delimited::Reader reader(data, delimiter);
  std::vector<std::string> fields;
  std::size_t row = 0;
  try {
    if (!reader.next(fields)) return {};
  } catch (const std::runtime_error& e) {
    throw CorpusError(std::string("header: ") + e.what());
  }
  std::optional<std::size_t> text_col, label_col, id_col;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    std::string name = text::ascii_lower(text::trim(fields[i]));
    if (name == "text") text_col = i;
    if (name == "label") label_col = i;
    if (name == "id") id_col = i;
  }
  if (!text_col) throw CorpusError("header has no 'text' column");
  const std::size_t width = fields.size();

  CorpusBuilder builder;
  while (true) {
    try {
      if (!reader.next(fields)) break;
    } catch (const std::runtime_error& e) {
      throw CorpusError(e.what(), row + 1);
    }
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    ++row;
    if (fields.size() != width) {
      throw CorpusError("expected " + std::to_string(width) +
                            " fields, found " + std::to_string(fields.size()),
                        row);
    }
    std::optional<std::string> id;
    if (id_col) id = std::string(text::trim(fields[*id_col]));
    builder.add(row, std::move(id), std::move(fields[*text_col]),
                label_col ? std::string_view(fields[*label_col]) : "");
  }
  return builder.finish();
}

std::vector<LabeledDocument> load_jsonl(std::istream& in) {
  CorpusBuilder builder;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (text::trim(line).empty()) continue;
    ++row;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw CorpusError(std::string("invalid JSON: ") + e.what(), row);
    }
    if (!record.is_object()) throw CorpusError("record is not an object", row);
    auto text_it = record.find("text");
    if (text_it == record.end() || !text_it->is_string()) {
      throw CorpusError("missing string field 'text'", row);
    }
    std::optional<std::string> id;
    if (auto it = record.find("id"); it != record.end() && !it->is_null()) {
      if (it->is_string()) {
        id = it->get<std::string>();
      } else if (it->is_number_integer()) {
        id = std::to_string(it->get<long long>());
      } else {
        throw CorpusError("'id' must be a string or integer", row);
      }
    }
    std::string label;
    if (auto it = record.find("label"); it != record.end() && !it->is_null()) {
      if (!it->is_string()) throw CorpusError("'label' must be a string", row);
      label = it->get<std::string>();
    }
    builder.add(row, std::move(id), text_it->get<std::string>(), label);
  }
  return builder.finish();
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 256)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
}

}  // namespace

std::vector<LabeledDocument> load_corpus(std::istream& in,
                                         CorpusFormat format) {
  if (format == CorpusFormat::kJsonl) return load_jsonl(in);
  std::string data{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return load_delimited(data, format == CorpusFormat::kCsv ? ',' : '\t');
}

std::vector<LabeledDocument> load_corpus(const std::filesystem::path& path,
                                         CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus " + path.string());
  return load_corpus(in, format);
}

Thresholds parse_thresholds(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw Error("thresholds must be 'positive,negative'");
  }
  auto pos = text::parse_double(text::trim(text.substr(0, comma)));
  auto neg = text::parse_double(text::trim(text.substr(comma + 1)));
  if (!pos || !neg) throw Error("thresholds must be two numbers");
  if (!(*neg < *pos)) {
    throw Error("negative threshold must be below the positive threshold");
  }
  return {*pos, *neg};
}

Label classify(double compound, const Thresholds& thresholds) {
  if (compound >= thresholds.positive) return Label::kPositive;
  if (compound <= thresholds.negative) return Label::kNegative;
  return Label::kNeutral;
}

std::vector<ScoredDocument> score_corpus(
    const std::vector<LabeledDocument>& corpus, const Lexicon& lexicon,
    const EngineConfig& cfg, const Thresholds& thresholds, unsigned threads) {
  std::vector<ScoredDocument> out(corpus.size());
  parallel_for(corpus.size(), threads, [&](std::size_t i) {
    const LabeledDocument& doc = corpus[i];
    ScoredDocument& s = out[i];
    s.id = doc.id;
    s.text = doc.text;
    s.gold = doc.gold;
    s.scores = polarity_scores(doc.text, lexicon, cfg);
    s.label = classify(s.scores.compound, thresholds);
  });
  return out;
}

std::vector<ComparisonRow> compare_lexicons(
    const std::vector<LabeledDocument>& corpus, const Lexicon& base,
    const Lexicon& augmented, const EngineConfig& cfg,
    const Thresholds& thresholds, unsigned threads) {
  std::vector<ComparisonRow> rows(corpus.size());
  parallel_for(corpus.size(), threads, [&](std::size_t i) {
    const LabeledDocument& doc = corpus[i];
    ComparisonRow& row = rows[i];
    row.id = doc.id;
    row.text = doc.text;
    row.gold = doc.gold;
    TokenizedDocument tokens = tokenize(doc.text, cfg);
    row.compound_before = polarity_scores(tokens, base, cfg).compound;
    row.compound_after = polarity_scores(tokens, augmented, cfg).compound;
    row.label_before = classify(row.compound_before, thresholds);
    row.label_after = classify(row.compound_after, thresholds);
  });
  return rows;
}

}  // namespace naijasent
