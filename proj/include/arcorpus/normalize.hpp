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

#ifndef ARCORPUS_NORMALIZE_HPP_
#define ARCORPUS_NORMALIZE_HPP_

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arcorpus {

enum class DigitPolicy {
  kConvertOnly,
  kConvertThenDrop,  // samples still holding digits after conversion are
                     // dropped by the pipeline's digit check
};

struct NormalizeConfig {
  DigitPolicy digit_policy = DigitPolicy::kConvertOnly;
  // Marks deleted outright.
  std::set<char32_t> rare_punct_removals = {
      U':', U'-', U'"',    U'\'',   0x201C, 0x201D, 0x2018, 0x2019,
      U';', 0x061B, 0x0021, 0xFE57, U'(',   U')',   0x2026,
  };
  // Foreign punctuation folded onto the canonical Arabic marks.
  std::map<char32_t, char32_t> punct_map = {
      {U'?', 0x061F},
      {U',', 0x060C},
      {0x06D4, 0x002E},
  };
  bool collapse_repeats = true;

  // Throws ConfigError when punct_map targets leave the canonical mark set
  // or the removal set overlaps the map domain.
  void Validate() const;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// U+0660-0669 and U+06F0-06F9 to ASCII digits of equal value.
std::u32string ConvertEasternDigits(std::u32string_view text);
std::string ConvertEasternDigits(std::string_view utf8);

// NFKC; folds presentation forms and canonically orders combining marks.
std::string UnicodeNormalize(std::string_view utf8);

// Deletes U+0640 (Tatweel).
std::u32string RemoveKasheeda(std::u32string_view text);
std::string RemoveKasheeda(std::string_view utf8);

// Rare-mark removal, foreign-mark mapping, whitespace-before-punctuation
// removal and same-mark run collapsing.
std::u32string NormalizePunctuation(std::u32string_view text,
                                    const NormalizeConfig& cfg);
std::string NormalizePunctuation(std::string_view utf8,
                                 const NormalizeConfig& cfg);

// Full chain: eastern digits -> NFKC -> kasheeda -> punctuation ->
// whitespace collapse + trim. Idempotent.
std::string NormalizeText(std::string_view utf8, const NormalizeConfig& cfg);

}  // namespace arcorpus

#endif  // ARCORPUS_NORMALIZE_HPP_
