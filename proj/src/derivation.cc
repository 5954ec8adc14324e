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

#include "naijasent/derivation.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <unordered_set>

#include "naijasent/error.h"
#include "text.h"

namespace naijasent {

DerivationRecord derive_entry(std::string_view pidgin_token,
                              std::vector<SourceValence> sources) {
  std::string token = normalize_token(text::trim(pidgin_token));
  if (token.empty()) throw DerivationError("empty Pidgin token");
  if (sources.empty()) {
    throw DerivationError("no English sources for '" + token + "'");
  }
  std::vector<double> values;
  values.reserve(sources.size());
  for (const auto& s : sources) {
    if (!std::isfinite(s.valence) || s.valence < kMinValence ||
        s.valence > kMaxValence) {
      throw DerivationError("source '" + s.token + "' of '" + token +
                            "' has valence " +
                            format_round_trip(s.valence) +
                            " outside [-4, 4]");
    }
    values.push_back(s.valence);
  }
  // Summing in sorted order makes the mean independent of source order down
  // to the last bit.
  std::sort(values.begin(), values.end());
  double sum = std::accumulate(values.begin(), values.end(), 0.0);
  DerivationRecord record;
  record.pidgin_token = std::move(token);
  record.derived_valence = std::clamp(
      sum / static_cast<double>(values.size()), values.front(), values.back());
  record.sources = std::move(sources);
  return record;
}

LexiconEntry to_entry(const DerivationRecord& record) {
  return LexiconEntry{record.pidgin_token, record.derived_valence, 0.0, {}};
}

std::string display_valence(double valence) {
  return text::format_fixed(valence, 1);
}

bool has_mixed_signs(const DerivationRecord& record) {
  bool pos = false;
  bool neg = false;
  for (const auto& s : record.sources) {
    pos |= s.valence > 0.0;
    neg |= s.valence < 0.0;
  }
  return pos && neg;
}

namespace {

MappingSource parse_source(std::string_view item, std::size_t line) {
  item = text::trim(item);
  if (item.empty()) throw DerivationError("line " + std::to_string(line) +
                                          ": empty source in list");
  MappingSource src;
  if (item.back() == ')') {
    auto open = item.rfind('(');
    if (open != std::string_view::npos && open > 0) {
      auto inner = text::trim(item.substr(open + 1, item.size() - open - 2));
      // Tolerate "- 2.3" as printed in some tables.
      std::string compact;
      for (char c : inner) {
        if (c != ' ') compact.push_back(c);
      }
      if (auto v = text::parse_double(compact)) {
        src.token = normalize_token(text::trim(item.substr(0, open)));
        src.valence = *v;
        return src;
      }
    }
  }
  src.token = normalize_token(item);
  return src;
}

}  // namespace

std::vector<MappingLine> parse_mapping(std::istream& in) {
  std::vector<MappingLine> out;
  std::unordered_set<std::string> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (text::trim(raw).empty()) continue;
    std::string_view line = raw;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw DerivationError("line " + std::to_string(line_no) +
                            ": expected pidgin<TAB>english sources");
    }
    MappingLine m;
    m.line = line_no;
    m.pidgin_token = normalize_token(text::trim(line.substr(0, tab)));
    if (m.pidgin_token.empty()) {
      throw DerivationError("line " + std::to_string(line_no) +
                            ": empty Pidgin token");
    }
    std::string_view rest = line.substr(tab + 1);
    auto tab2 = rest.find('\t');
    std::string_view list = rest.substr(0, tab2);
    if (tab2 != std::string_view::npos) {
      auto avg_text = text::trim(rest.substr(tab2 + 1));
      auto avg = text::parse_double(avg_text);
      if (!avg) {
        throw DerivationError("line " + std::to_string(line_no) +
                              ": bad published average '" +
                              std::string(avg_text) + "'");
      }
      m.published_average = *avg;
    }
    if (text::trim(list).empty()) {
      throw DerivationError("line " + std::to_string(line_no) +
                            ": no English sources for '" + m.pidgin_token +
                            "'");
    }
    std::size_t start = 0;
    while (true) {
      auto comma = list.find(',', start);
      m.sources.push_back(parse_source(
          list.substr(start, comma == std::string_view::npos
                                 ? std::string_view::npos
                                 : comma - start),
          line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!seen.insert(m.pidgin_token).second) {
      throw DerivationError("line " + std::to_string(line_no) +
                            ": duplicate Pidgin token '" + m.pidgin_token +
                            "'");
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<MappingLine> parse_mapping_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open mapping " + path.string());
  return parse_mapping(in);
}

std::vector<DerivationIssue> lint_derivation(
    const DerivationRecord& record, std::optional<double> published_average) {
  std::vector<DerivationIssue> issues;
  if (has_mixed_signs(record)) {
    std::string list;
    for (const auto& s : record.sources) {
      if (!list.empty()) list += ", ";
      list += s.token + "(" + format_round_trip(s.valence) + ")";
    }
    issues.push_back({DerivationIssue::Kind::kMixedSigns, record.pidgin_token,
                      "sources of '" + record.pidgin_token +
                          "' disagree in sign: " + list});
  }
  if (published_average &&
      std::fabs(*published_average - record.derived_valence) > 0.05 + 1e-9) {
    issues.push_back(
        {DerivationIssue::Kind::kPublishedMismatch, record.pidgin_token,
         "'" + record.pidgin_token + "' averages to " +
             text::format_fixed(record.derived_valence, 4) + " (" +
             display_valence(record.derived_valence) +
             ") but the published average is " +
             format_round_trip(*published_average)});
  }
  return issues;
}

DerivationOutcome derive_from_mapping(const std::vector<MappingLine>& mapping,
                                      const Lexicon* source) {
  DerivationOutcome outcome;
  for (const auto& line : mapping) {
    std::vector<SourceValence> sources;
    for (const auto& src : line.sources) {
      if (src.valence) {
        sources.push_back({src.token, *src.valence});
        continue;
      }
      const LexiconEntry* e = source ? source->find(src.token) : nullptr;
      if (!e) {
        outcome.unresolved.push_back(line.pidgin_token + ":" + src.token);
        continue;
      }
      sources.push_back({src.token, e->valence});
    }
    if (!outcome.unresolved.empty()) continue;
    DerivationRecord record;
    try {
      record = derive_entry(line.pidgin_token, std::move(sources));
    } catch (const DerivationError& e) {
      throw DerivationError("line " + std::to_string(line.line) + ": " +
                            e.what());
    }
    auto issues = lint_derivation(record, line.published_average);
    outcome.issues.insert(outcome.issues.end(), issues.begin(), issues.end());
    outcome.records.push_back(std::move(record));
  }
  if (!outcome.unresolved.empty()) {
    outcome.records.clear();
    outcome.issues.clear();
  }
  return outcome;
}

Lexicon to_lexicon(const std::vector<DerivationRecord>& records,
                   std::string name) {
  Lexicon lex(std::move(name));
  for (const auto& r : records) {
    if (!lex.insert(to_entry(r))) {
      throw DerivationError("duplicate Pidgin token '" + r.pidgin_token + "'");
    }
  }
  return lex;
}

}  // namespace naijasent
