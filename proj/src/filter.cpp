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

#include "arcorpus/filter.hpp"

#include <cstdio>

#include "arcorpus/metrics.hpp"
#include "arcorpus/unicode.hpp"

namespace arcorpus {

const char* DropReasonName(DropReason reason) {
  switch (reason) {
    case DropReason::kOutOfAlphabet:
      return "out_of_alphabet";
    case DropReason::kDuration:
      return "duration";
    case DropReason::kWordRate:
      return "word_rate";
    case DropReason::kCharRate:
      return "char_rate";
    case DropReason::kHypWer:
      return "hyp_wer";
    case DropReason::kHypCer:
      return "hyp_cer";
    case DropReason::kEmptyText:
      return "empty_text";
  }
  return "?";
}

namespace {

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

bool IsBlank(std::u32string_view text) {
  for (char32_t c : text) {
    if (!IsAsciiSpace(c)) return false;
  }
  return true;
}

}  // namespace

DropDecision FilterAlphabet(const Sample& s, const AlphabetSpec& spec) {
  const std::u32string scalars = Utf8Decode(s.text);
  if (IsBlank(scalars)) {
    return DropDecision::Drop(DropReason::kEmptyText, "empty or blank text");
  }
  if (auto ooa = FindOutOfAlphabet(scalars, spec)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "U+%04X at scalar offset %zu",
                  static_cast<unsigned>(ooa->scalar), ooa->offset);
    return DropDecision::Drop(DropReason::kOutOfAlphabet, buf);
  }
  return DropDecision::Keep();
}

DropDecision FilterDuration(const Sample& s, const FilterConfig& cfg) {
  if (s.duration < cfg.min_duration || s.duration > cfg.max_duration) {
    return DropDecision::Drop(
        DropReason::kDuration,
        FormatDouble(s.duration) + "s outside [" +
            FormatDouble(cfg.min_duration) + ", " +
            FormatDouble(cfg.max_duration) + "]");
  }
  return DropDecision::Keep();
}

DropDecision FilterRates(const Sample& s, const FilterConfig& cfg) {
  if (s.duration <= 0) {
    return DropDecision::Drop(DropReason::kDuration,
                              "non-positive duration for rate check");
  }
  const std::u32string scalars = Utf8Decode(s.text);
  size_t words = 0;
  size_t chars = 0;
  bool in_word = false;
  for (char32_t c : scalars) {
    if (IsAsciiSpace(c)) {
      in_word = false;
    } else {
      if (!in_word) ++words;
      in_word = true;
      ++chars;
    }
  }
  const double word_rate = static_cast<double>(words) / s.duration;
  if (word_rate < cfg.min_word_rate || word_rate > cfg.max_word_rate) {
    return DropDecision::Drop(DropReason::kWordRate,
                              FormatDouble(word_rate) + " words/s outside [" +
                                  FormatDouble(cfg.min_word_rate) + ", " +
                                  FormatDouble(cfg.max_word_rate) + "]");
  }
  const double char_rate = static_cast<double>(chars) / s.duration;
  if (char_rate < cfg.min_char_rate || char_rate > cfg.max_char_rate) {
    return DropDecision::Drop(DropReason::kCharRate,
                              FormatDouble(char_rate) + " chars/s outside [" +
                                  FormatDouble(cfg.min_char_rate) + ", " +
                                  FormatDouble(cfg.max_char_rate) + "]");
  }
  return DropDecision::Keep();
}

DropDecision FilterByHypothesis(const Sample& s, const FilterConfig& cfg) {
  if (!s.pred_text) return DropDecision::Keep();
  ScoreOptions opts;
  opts.mode = ScoreMode::kPlain;
  const PairScore score = ScorePair(s.text, *s.pred_text, opts);
  auto percent = [](const EditCounts& c) {
    if (c.ref_len == 0) return c.distance() == 0 ? 0.0 : 100.0;
    return 100.0 * static_cast<double>(c.distance()) /
           static_cast<double>(c.ref_len);
  };
  const double wer = percent(score.word);
  if (wer > cfg.max_wer) {
    return DropDecision::Drop(DropReason::kHypWer,
                              "WER " + FormatDouble(wer) + " > " +
                                  FormatDouble(cfg.max_wer));
  }
  const double cer = percent(score.chr);
  if (cer > cfg.max_cer) {
    return DropDecision::Drop(DropReason::kHypCer,
                              "CER " + FormatDouble(cer) + " > " +
                                  FormatDouble(cfg.max_cer));
  }
  return DropDecision::Keep();
}

}  // namespace arcorpus
