// Copyright 2026  Arabic Corpus Toolkit Authors
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

#ifndef ARCORPUS_TESTS_TEST_UTIL_HPP_
#define ARCORPUS_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arcorpus/unicode.hpp"

namespace testutil {

// Builds a UTF-8 string from code points.
inline std::string U(std::initializer_list<char32_t> cps) {
  std::u32string s(cps.begin(), cps.end());
  return arcorpus::Utf8Encode(s);
}

// Independent edit-distance oracle: memoized recursion over suffixes,
// distance only. Kept free of the production DP's cell/tie-break machinery.
template <typename T>
int OracleDistance(const std::vector<T>& a, const std::vector<T>& b) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  std::vector<int> memo((n + 1) * (m + 1), -1);
  auto rec = [&](auto&& self, int i, int j) -> int {
    if (i == n) return m - j;
    if (j == m) return n - i;
    int& r = memo[i * (m + 1) + j];
    if (r >= 0) return r;
    int best = self(self, i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
    const int del = self(self, i + 1, j) + 1;
    if (del < best) best = del;
    const int ins = self(self, i, j + 1) + 1;
    if (ins < best) best = ins;
    return r = best;
  };
  return rec(rec, 0, 0);
}

struct NfkcCase {
  std::string src;
  std::string expected;
};

// Reads a reference file of `hex hex ...<TAB>hex hex ...` lines.
inline std::vector<NfkcCase> ReadNfkcCases(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<NfkcCase> cases;
  std::string line;
  auto decode = [](const std::string& field) {
    std::u32string s;
    std::istringstream is(field);
    std::string hex;
    while (is >> hex) {
      s.push_back(static_cast<char32_t>(std::stoul(hex, nullptr, 16)));
    }
    return arcorpus::Utf8Encode(s);
  };
  while (std::getline(in, line)) {
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) continue;
    cases.push_back(
        {decode(line.substr(0, tab)), decode(line.substr(tab + 1))});
  }
  return cases;
}

// Shared pools for Arabic fuzz strings.
inline const std::vector<char32_t>& BaseLetterPool() {
  static const std::vector<char32_t> pool = {
      0x0621, 0x0622, 0x0623, 0x0624, 0x0625, 0x0626, 0x0627, 0x0628, 0x0629,
      0x062A, 0x062B, 0x062C, 0x062D, 0x062E, 0x062F, 0x0630, 0x0631, 0x0632,
      0x0633, 0x0634, 0x0635, 0x0636, 0x0637, 0x0638, 0x0639, 0x063A, 0x0641,
      0x0642, 0x0643, 0x0644, 0x0645, 0x0646, 0x0647, 0x0648, 0x0649, 0x064A};
  return pool;
}

inline const std::vector<char32_t>& DiacriticPool() {
  static const std::vector<char32_t> pool = {0x064B, 0x064C, 0x064D, 0x064E,
                                             0x064F, 0x0650, 0x0651, 0x0652};
  return pool;
}

// Random in-alphabet sentence (letters + spaces), no diacritics/punctuation.
inline std::u32string RandomBareSentence(std::mt19937& rng, int max_words = 8,
                                         int max_word_len = 6) {
  std::uniform_int_distribution<int> word_count(1, max_words);
  std::uniform_int_distribution<int> word_len(1, max_word_len);
  std::uniform_int_distribution<size_t> pick(0, BaseLetterPool().size() - 1);
  std::u32string s;
  const int words = word_count(rng);
  for (int w = 0; w < words; ++w) {
    if (w > 0) s.push_back(U' ');
    const int len = word_len(rng);
    for (int i = 0; i < len; ++i) s.push_back(BaseLetterPool()[pick(rng)]);
  }
  return s;
}

}  // namespace testutil

#endif  // ARCORPUS_TESTS_TEST_UTIL_HPP_
