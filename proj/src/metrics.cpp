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

#include "arcorpus/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "arcorpus/unicode.hpp"

namespace arcorpus {

const char* ScoreModeName(ScoreMode mode) {
  switch (mode) {
    case ScoreMode::kPlain:
      return "plain";
    case ScoreMode::kPC:
      return "pc";
    case ScoreMode::kPCD:
      return "pcd";
  }
  return "?";
}

namespace {

struct Cell {
  uint32_t cost;
  uint32_t sub;
  uint32_t del;
  uint32_t ins;
};

}  // namespace

template <typename T>
EditCounts ComputeEditCounts(const std::vector<T>& ref,
                             const std::vector<T>& hyp) {
  const size_t n = ref.size();
  const size_t m = hyp.size();
  std::vector<Cell> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) {
    prev[j] = {static_cast<uint32_t>(j), 0, 0, static_cast<uint32_t>(j)};
  }
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = {static_cast<uint32_t>(i), 0, static_cast<uint32_t>(i), 0};
    for (size_t j = 1; j <= m; ++j) {
      const bool match = ref[i - 1] == hyp[j - 1];
      Cell best = prev[j - 1];
      best.cost += match ? 0 : 1;
      if (!match) ++best.sub;
      Cell ins = cur[j - 1];
      ++ins.cost;
      ++ins.ins;
      if (ins.cost < best.cost) best = ins;
      Cell del = prev[j];
      ++del.cost;
      ++del.del;
      if (del.cost < best.cost) best = del;
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  const Cell& r = prev[m];
  EditCounts out;
  out.substitutions = r.sub;
  out.deletions = r.del;
  out.insertions = r.ins;
  out.ref_len = n;
  return out;
}

template EditCounts ComputeEditCounts<char32_t>(const std::vector<char32_t>&,
                                                const std::vector<char32_t>&);
template EditCounts ComputeEditCounts<std::u32string>(
    const std::vector<std::u32string>&, const std::vector<std::u32string>&);
template EditCounts ComputeEditCounts<int>(const std::vector<int>&,
                                           const std::vector<int>&);

std::u32string PrepareForScoring(std::string_view utf8,
                                 const ScoreOptions& opts) {
  std::u32string text =
      LetterNormalize(Utf8Decode(utf8), opts.letter_norm);
  switch (opts.mode) {
    case ScoreMode::kPlain:
      text = StripPunctuation(StripDiacritics(text));
      break;
    case ScoreMode::kPC:
      text = StripDiacritics(text);
      break;
    case ScoreMode::kPCD:
      break;
  }
  return CollapseWhitespace(text);
}

std::vector<std::u32string> WordTokens(std::u32string_view prepared,
                                       bool split_punct) {
  std::vector<std::u32string> tokens;
  std::u32string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back(cur);
      cur.clear();
    }
  };
  for (char32_t c : prepared) {
    if (IsAsciiSpace(c)) {
      flush();
    } else if (split_punct && IsArabicPunctuation(c)) {
      flush();
      tokens.push_back(std::u32string(1, c));
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return tokens;
}

std::vector<char32_t> CharTokens(std::u32string_view prepared,
                                 bool include_spaces) {
  std::vector<char32_t> chars;
  chars.reserve(prepared.size());
  for (char32_t c : prepared) {
    if (!include_spaces && IsAsciiSpace(c)) continue;
    chars.push_back(c);
  }
  return chars;
}

PairScore ScorePair(std::string_view ref, std::string_view hyp,
                    const ScoreOptions& opts) {
  const std::u32string pref = PrepareForScoring(ref, opts);
  const std::u32string phyp = PrepareForScoring(hyp, opts);
  PairScore out;
  out.word = ComputeEditCounts(WordTokens(pref, opts.split_punct),
                               WordTokens(phyp, opts.split_punct));
  out.chr = ComputeEditCounts(CharTokens(pref, opts.cer_include_spaces),
                              CharTokens(phyp, opts.cer_include_spaces));
  return out;
}

double RoundPercent(double value) {
  const double scaled = value * 100.0;
  const double floor_v = std::floor(scaled);
  const double frac = scaled - floor_v;
  double rounded;
  if (frac > 0.5) {
    rounded = floor_v + 1;
  } else if (frac < 0.5) {
    rounded = floor_v;
  } else {
    // half: to even
    rounded = (std::fmod(floor_v, 2.0) == 0.0) ? floor_v : floor_v + 1;
  }
  return rounded / 100.0;
}

namespace {

double SampleWer(const EditCounts& c) {
  if (c.ref_len == 0) {
    return c.distance() == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return 100.0 * static_cast<double>(c.distance()) /
         static_cast<double>(c.ref_len);
}

}  // namespace

ScoreReport ScoreCorpus(
    const std::vector<std::tuple<std::string, std::string, std::string>>&
        samples,
    const ScoreOptions& opts) {
  ScoreReport report;
  report.mode = opts.mode;
  report.letter_norm = opts.letter_norm;
  report.per_sample.reserve(samples.size());
  for (const auto& [id, ref, hyp] : samples) {
    const PairScore s = ScorePair(ref, hyp, opts);
    SampleScore ss;
    ss.id = id;
    ss.word = s.word;
    ss.chr = s.chr;
    ss.wer_percent = SampleWer(s.word);
    report.word_totals += s.word;
    report.char_totals += s.chr;
    report.per_sample.push_back(std::move(ss));
  }
  if (report.word_totals.ref_len > 0) {
    report.wer_percent = RoundPercent(
        100.0 * static_cast<double>(report.word_totals.distance()) /
        static_cast<double>(report.word_totals.ref_len));
  } else {
    report.wer_percent = report.word_totals.distance() == 0 ? 0.0 : 100.0;
  }
  if (report.char_totals.ref_len > 0) {
    report.cer_percent = RoundPercent(
        100.0 * static_cast<double>(report.char_totals.distance()) /
        static_cast<double>(report.char_totals.ref_len));
  } else {
    report.cer_percent = report.char_totals.distance() == 0 ? 0.0 : 100.0;
  }
  // Worst ten by per-sample WER; stable on input order for ties.
  std::vector<SampleScore> worst = report.per_sample;
  std::stable_sort(worst.begin(), worst.end(),
                   [](const SampleScore& a, const SampleScore& b) {
                     return a.wer_percent > b.wer_percent;
                   });
  if (worst.size() > 10) worst.resize(10);
  report.worst = std::move(worst);
  return report;
}

}  // namespace arcorpus
