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

#ifndef ARCORPUS_METRICS_HPP_
#define ARCORPUS_METRICS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "arcorpus/alphabet.hpp"

namespace arcorpus {

// Plain: strip punctuation and diacritics from both sides.
// PC: strip diacritics only. PCD: strip nothing.
enum class ScoreMode { kPlain, kPC, kPCD };

const char* ScoreModeName(ScoreMode mode);

struct EditCounts {
  uint64_t substitutions = 0;
  uint64_t deletions = 0;
  uint64_t insertions = 0;
  uint64_t ref_len = 0;

  uint64_t distance() const { return substitutions + deletions + insertions; }
  EditCounts& operator+=(const EditCounts& o) {
    substitutions += o.substitutions;
    deletions += o.deletions;
    insertions += o.insertions;
    ref_len += o.ref_len;
    return *this;
  }
};

// Minimal unit-cost edit alignment. Ties between equal-cost predecessors are
// broken preferring substitution, then insertion, then deletion, so counts
// are reproducible across platforms.
template <typename T>
EditCounts ComputeEditCounts(const std::vector<T>& ref,
                             const std::vector<T>& hyp);

extern template EditCounts ComputeEditCounts<char32_t>(
    const std::vector<char32_t>&, const std::vector<char32_t>&);
extern template EditCounts ComputeEditCounts<std::u32string>(
    const std::vector<std::u32string>&, const std::vector<std::u32string>&);
extern template EditCounts ComputeEditCounts<int>(const std::vector<int>&,
                                                  const std::vector<int>&);

struct ScoreOptions {
  ScoreMode mode = ScoreMode::kPlain;
  LetterNormRules letter_norm;
  bool split_punct = false;        // punctuation marks as separate WER tokens
  bool cer_include_spaces = false;
};

struct PairScore {
  EditCounts word;
  EditCounts chr;
};

// Applies letter normalization and mode-dependent stripping to both strings,
// then computes word- and character-level edit counts.
PairScore ScorePair(std::string_view ref, std::string_view hyp,
                    const ScoreOptions& opts);

// Mode-dependent text preparation (exposed for reuse by the hypothesis
// filter and for tests).
std::u32string PrepareForScoring(std::string_view utf8,
                                 const ScoreOptions& opts);
std::vector<std::u32string> WordTokens(std::u32string_view prepared,
                                       bool split_punct);
std::vector<char32_t> CharTokens(std::u32string_view prepared,
                                 bool include_spaces);

struct SampleScore {
  std::string id;
  EditCounts word;
  EditCounts chr;
  double wer_percent = 0;  // per-sample, for triage ordering only
};

struct ScoreReport {
  ScoreMode mode = ScoreMode::kPlain;
  LetterNormRules letter_norm;
  double wer_percent = 0;  // pooled: 100 * (S+D+I) / sum ref_len
  double cer_percent = 0;
  EditCounts word_totals;
  EditCounts char_totals;
  std::vector<SampleScore> per_sample;
  std::vector<SampleScore> worst;  // up to ten, by per-sample WER
};

// Pooled aggregation over (id, ref, hyp) triples.
ScoreReport ScoreCorpus(
    const std::vector<std::tuple<std::string, std::string, std::string>>&
        samples,
    const ScoreOptions& opts);

// Banker's rounding to two decimals, as used in every reported percentage.
double RoundPercent(double value);

}  // namespace arcorpus

#endif  // ARCORPUS_METRICS_HPP_
