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

#ifndef ARCORPUS_DEDUP_HPP_
#define ARCORPUS_DEDUP_HPP_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "arcorpus/alphabet.hpp"
#include "arcorpus/manifest.hpp"

namespace arcorpus {

// Transcript identity key: diacritics and punctuation stripped, configured
// letter folds applied, whitespace collapsed and trimmed. Texts differing
// only in those dimensions share a key.
std::string DedupKey(std::string_view text, const LetterNormRules& rules);

std::unordered_set<std::string> BuildKeySet(const std::vector<Sample>& samples,
                                            const LetterNormRules& rules);

struct OverlapResult {
  std::vector<Sample> kept;
  std::vector<Sample> removed;
};

// Removes every target sample whose non-empty key appears in the reference
// key set. target=train vs reference=dev+test reproduces the MCV direction;
// target=test vs reference=train the EveryAyah direction.
OverlapResult RemoveOverlap(const std::vector<Sample>& target,
                            const std::unordered_set<std::string>& reference,
                            const LetterNormRules& rules);

}  // namespace arcorpus

#endif  // ARCORPUS_DEDUP_HPP_
