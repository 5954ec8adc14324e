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

#include "support/test_support.h"

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "naijasent/cli.h"

namespace naijasent::testing {

namespace fs = std::filesystem;

fs::path test_data(std::string_view name) {
  return fs::path(NAIJASENT_TEST_DATA_DIR) / fs::path(name);
}

fs::path asset(std::string_view name) {
  return fs::path(NAIJASENT_ASSET_DIR) / fs::path(name);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

const Lexicon& english_lexicon() {
  static const Lexicon lexicon = parse_lexicon_file(asset("vader_lexicon.txt"));
  return lexicon;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          ("naijasent-test-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter++));
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"naijasent"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = naijasent::run_cli(static_cast<int>(argv.size()), argv.data(), out,
                              err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<ReferenceRow> load_reference_rows(const fs::path& p) {
  std::istringstream in(read_file(p));
  std::string line;
  std::getline(in, line);  // header
  std::vector<ReferenceRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos;
         start = tab + 1) {
      f.push_back(line.substr(start, tab - start));
    }
    f.push_back(line.substr(start));
    if (f.size() != 5) throw std::runtime_error("bad reference row: " + line);
    rows.push_back({f[0], std::stod(f[1]), std::stod(f[2]), std::stod(f[3]),
                    std::stod(f[4])});
  }
  return rows;
}

namespace {

std::string random_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(2, 9);
  std::uniform_int_distribution<int> letter('a', 'z');
  std::string w;
  for (int i = len(rng); i > 0; --i) w.push_back(static_cast<char>(letter(rng)));
  return w;
}

void append_utf8(std::string& s, char32_t cp) {
  if (cp < 0x80) {
    s.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    s.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    s.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    s.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    s.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

Lexicon random_lexicon(std::mt19937_64& rng, std::size_t size, bool phrases) {
  std::uniform_real_distribution<double> valence(-4.0, 4.0);
  std::bernoulli_distribution phrase(phrases ? 0.05 : 0.0);
  Lexicon lexicon("random");
  while (lexicon.size() < size) {
    std::string token = random_word(rng);
    if (phrase(rng)) token += " " + random_word(rng);
    double v = std::round(valence(rng) * 10.0) / 10.0;
    lexicon.insert({token, v, 0.0, {}});
  }
  return lexicon;
}

std::string random_utf8(std::mt19937_64& rng, std::size_t max_codepoints,
                        const std::vector<std::string>& vocabulary) {
  static const char32_t kSpecial[] = {
      U' ', U' ', U' ', U'\t', U'\n', U'!', U'?', U'.', U',', U'\'', U'"',
      U':', U')', U'(', U'-', U'#', U'@', 0x00A0, 0x2019, 0x3000, 0x00E9,
      0x00DF, 0x0416, 0x4E2D, 0x1F600, 0x1F44D, 0x0301, 0x200B};
  std::uniform_int_distribution<std::size_t> count(0, max_codepoints);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<std::size_t> special(0, std::size(kSpecial) - 1);
  std::uniform_int_distribution<int> ascii(0x21, 0x7E);
  std::uniform_int_distribution<std::uint32_t> bmp(0xA0, 0xD7FF);
  std::string s;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    switch (kind(rng)) {
      case 0:
      case 1:
      case 2:
        if (!vocabulary.empty()) {
          std::uniform_int_distribution<std::size_t> pick(
              0, vocabulary.size() - 1);
          std::string w = vocabulary[pick(rng)];
          if (kind(rng) == 0) {
            for (auto& c : w) {
              if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 32);
            }
          }
          s += w;
          s.push_back(' ');
          break;
        }
        [[fallthrough]];
      case 3:
      case 4:
        append_utf8(s, kSpecial[special(rng)]);
        break;
      case 5:
        append_utf8(s, bmp(rng));
        break;
      default:
        append_utf8(s, static_cast<char32_t>(ascii(rng)));
        break;
    }
  }
  return s;
}

std::string synthetic_corpus_csv(std::size_t rows, std::uint64_t seed) {
  static const char* const kPidgin[] = {
      "abeg", "wetin", "dey",   "una",  "oga",    "wahala", "sabi",  "na",
      "wey",  "don",   "pikin", "shey", "jare",   "abi",    "oya",   "comot",
      "make", "dem",   "beta",  "chop", "ginger", "kasala", "gbege", "para"};
  static const char* const kEnglish[] = {
      "good",   "bad",   "great",  "terrible", "love",  "hate",   "happy",
      "sad",    "match", "goal",   "referee",  "fans",  "not",    "very",
      "really", "but",   "never",  "win",      "lost",  "awful",  "amazing",
      "angry",  "fine",  "nice",   "problem",  "LOL",   "kind",   "of",
      "GREAT",  "at",    "least",  "without",  "doubt", "boring", "fun"};
  static const char* const kTails[] = {"", "!", "!!", "?", "??", "...", " :)",
                                       " :(", " 0-2", ", sha"};
  static const char* const kLabels[] = {"negative", "neutral", "positive", ""};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> words(3, 22);
  std::uniform_int_distribution<std::size_t> pidgin(0, std::size(kPidgin) - 1);
  std::uniform_int_distribution<std::size_t> english(0, std::size(kEnglish) - 1);
  std::uniform_int_distribution<std::size_t> tail(0, std::size(kTails) - 1);
  std::uniform_int_distribution<std::size_t> label(0, std::size(kLabels) - 1);
  std::bernoulli_distribution use_pidgin(0.55), comma(0.08);
  std::string csv = "id,text,label\n";
  for (std::size_t r = 0; r < rows; ++r) {
    std::string text;
    for (int w = words(rng); w > 0; --w) {
      if (!text.empty()) text += comma(rng) ? ", " : " ";
      text += use_pidgin(rng) ? kPidgin[pidgin(rng)] : kEnglish[english(rng)];
    }
    text += kTails[tail(rng)];
    std::string quoted = "\"";
    for (char c : text) {
      if (c == '"') quoted.push_back('"');
      quoted.push_back(c);
    }
    quoted.push_back('"');
    csv += "doc" + std::to_string(r) + "," + quoted + "," + kLabels[label(rng)] +
           "\n";
  }
  return csv;
}

std::vector<std::string> vocabulary_of(const Lexicon& lexicon) {
  std::vector<std::string> words;
  for (const auto* e : lexicon.sorted()) words.push_back(e->token);
  return words;
}

}  // namespace naijasent::testing
