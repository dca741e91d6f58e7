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

#include "arcorpus/dedup.hpp"

#include "arcorpus/unicode.hpp"

namespace arcorpus {

std::string DedupKey(std::string_view text, const LetterNormRules& rules) {
  std::u32string scalars = Utf8Decode(text);
  scalars = StripDiacritics(scalars);
  scalars = StripPunctuation(scalars);
  scalars = LetterNormalize(scalars, rules);
  return Utf8Encode(CollapseWhitespace(scalars));
}

std::unordered_set<std::string> BuildKeySet(const std::vector<Sample>& samples,
                                            const LetterNormRules& rules) {
  std::unordered_set<std::string> keys;
  keys.reserve(samples.size());
  for (const Sample& s : samples) {
    std::string key = DedupKey(s.text, rules);
    if (!key.empty()) keys.insert(std::move(key));
  }
  return keys;
}

OverlapResult RemoveOverlap(const std::vector<Sample>& target,
                            const std::unordered_set<std::string>& reference,
                            const LetterNormRules& rules) {
  OverlapResult result;
  for (const Sample& s : target) {
    const std::string key = DedupKey(s.text, rules);
    // Empty keys (punctuation-only transcripts) never match; they are left
    // for the empty-text filter.
    if (!key.empty() && reference.count(key)) {
      result.removed.push_back(s);
    } else {
      result.kept.push_back(s);
    }
  }
  return result;
}

}  // namespace arcorpus
