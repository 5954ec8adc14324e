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

#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <string>

#include "naijasent/engine.h"
#include "naijasent/error.h"
#include "text.h"

namespace naijasent {

void validate(const EngineConfig& cfg) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) {
      throw ConfigError(std::string(name) + " must be positive");
    }
  };
  positive(cfg.alpha, "alpha");
  positive(cfg.booster_increment, "booster_increment");
  positive(cfg.caps_scalar, "caps_scalar");
  positive(cfg.exclamation_unit, "exclamation_unit");
  positive(cfg.question_unit, "question_unit");
  positive(cfg.question_cap, "question_cap");
  positive(cfg.but_before_weight, "but_before_weight");
  positive(cfg.but_after_weight, "but_after_weight");
  for (double d : cfg.booster_distance_decay) {
    positive(d, "booster_distance_decay");
  }
  if (!(cfg.negation_scalar < 0.0)) {
    throw ConfigError("negation_scalar must be negative");
  }
  if (cfg.exclamation_max_count < 0) {
    throw ConfigError("exclamation_max_count must be non-negative");
  }
  if (cfg.max_ngram < 1 || cfg.max_ngram > 3) {
    throw ConfigError("max_ngram must be between 1 and 3");
  }
}

namespace {

double to_real(std::string_view key, std::string_view value) {
  auto v = text::parse_double(value);
  if (!v) {
    throw ConfigError("bad value '" + std::string(value) + "' for " +
                      std::string(key));
  }
  return *v;
}

int to_int(std::string_view key, std::string_view value) {
  double v = to_real(key, value);
  if (v < -1e6 || v > 1e6 || v != static_cast<int>(v)) {
    throw ConfigError(std::string(key) + " must be an integer");
  }
  return static_cast<int>(v);
}

bool to_bool(std::string_view key, std::string_view value) {
  std::string v = text::ascii_lower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("bad boolean '" + std::string(value) + "' for " +
                    std::string(key));
}

}  // namespace

EngineConfig parse_engine_config(std::istream& in) {
  EngineConfig cfg;
  using Setter = std::function<void(std::string_view, std::string_view)>;
  const std::map<std::string, Setter, std::less<>> setters = {
      {"alpha", [&](auto k, auto v) { cfg.alpha = to_real(k, v); }},
      {"booster_increment",
       [&](auto k, auto v) { cfg.booster_increment = to_real(k, v); }},
      {"caps_scalar", [&](auto k, auto v) { cfg.caps_scalar = to_real(k, v); }},
      {"negation_scalar",
       [&](auto k, auto v) { cfg.negation_scalar = to_real(k, v); }},
      {"exclamation_unit",
       [&](auto k, auto v) { cfg.exclamation_unit = to_real(k, v); }},
      {"exclamation_max_count",
       [&](auto k, auto v) { cfg.exclamation_max_count = to_int(k, v); }},
      {"question_unit",
       [&](auto k, auto v) { cfg.question_unit = to_real(k, v); }},
      {"question_cap",
       [&](auto k, auto v) { cfg.question_cap = to_real(k, v); }},
      {"but_before_weight",
       [&](auto k, auto v) { cfg.but_before_weight = to_real(k, v); }},
      {"but_after_weight",
       [&](auto k, auto v) { cfg.but_after_weight = to_real(k, v); }},
      {"booster_distance_decay",
       [&](auto k, auto v) {
         std::size_t idx = 0;
         std::size_t start = 0;
         while (true) {
           auto comma = v.find(',', start);
           if (idx == 3) throw ConfigError(std::string(k) + " takes 3 values");
           cfg.booster_distance_decay[idx++] =
               to_real(k, text::trim(v.substr(start, comma == v.npos
                                                         ? v.npos
                                                         : comma - start)));
           if (comma == v.npos) break;
           start = comma + 1;
         }
         if (idx != 3) throw ConfigError(std::string(k) + " takes 3 values");
       }},
      {"max_ngram", [&](auto k, auto v) { cfg.max_ngram = to_int(k, v); }},
      {"normalize_elongation",
       [&](auto k, auto v) { cfg.normalize_elongation = to_bool(k, v); }},
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    auto key = text::trim(line.substr(0, eq));
    auto value = text::trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" +
                        std::string(key) + "'");
    }
    try {
      it->second(key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  validate(cfg);
  return cfg;
}

EngineConfig load_engine_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  return parse_engine_config(in);
}

}  // namespace naijasent
