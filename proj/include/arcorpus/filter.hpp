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

#ifndef ARCORPUS_FILTER_HPP_
#define ARCORPUS_FILTER_HPP_

#include <optional>
#include <string>

#include "arcorpus/alphabet.hpp"
#include "arcorpus/manifest.hpp"

namespace arcorpus {

enum class DropReason {
  kOutOfAlphabet,
  kDuration,
  kWordRate,
  kCharRate,
  kHypWer,
  kHypCer,
  kEmptyText,
};

const char* DropReasonName(DropReason reason);

struct DropDecision {
  bool kept = true;
  std::optional<DropReason> reason;
  std::string detail;

  static DropDecision Keep() { return {}; }
  static DropDecision Drop(DropReason r, std::string detail) {
    return {false, r, std::move(detail)};
  }
};

struct FilterConfig {
  double min_duration = 0.1;
  double max_duration = 20.0;
  double min_word_rate = 0.3;   // words per second
  double max_word_rate = 8.0;
  double min_char_rate = 1.0;   // non-space scalars per second
  double max_char_rate = 35.0;
  double max_wer = 60.0;  // percent, strict >
  double max_cer = 30.0;
};

// Drop when the text is empty/whitespace-only or holds a scalar outside the
// alphabet; detail records the scalar index and code point.
DropDecision FilterAlphabet(const Sample& s, const AlphabetSpec& spec);

// Keep iff min_duration <= duration <= max_duration (bounds inclusive).
DropDecision FilterDuration(const Sample& s, const FilterConfig& cfg);

// Word rate checked before char rate; zero duration drops as Duration.
DropDecision FilterRates(const Sample& s, const FilterConfig& cfg);

// Plain-mode WER/CER of pred_text against text; drop on strict violation.
// Samples without pred_text are kept (flagged by the pipeline summary).
DropDecision FilterByHypothesis(const Sample& s, const FilterConfig& cfg);

}  // namespace arcorpus

#endif  // ARCORPUS_FILTER_HPP_
