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

#ifndef ARCORPUS_ALPHABET_HPP_
#define ARCORPUS_ALPHABET_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

namespace arcorpus {

enum class CharClass {
  kBaseLetter,
  kDiacritic,
  kPunctuation,
  kSpace,
  kDigit,
  kOther,
};

// Character inventory: 28 primary letters, 6 Hamza forms, Ta' Marbuta and
// Alif Maksura (36 base letters), 8 diacritics (Fathah, Kasrah, Dammah,
// Sukun, Shaddah and the three Tanween forms), 3 punctuation marks.
class AlphabetSpec {
 public:
  // 36 letters + punctuation, diacritics out-of-alphabet (MSA, punctuated).
  static const AlphabetSpec& MsaPc();
  // 44 symbols + punctuation, diacritics in-alphabet (CA, punctuated +
  // diacritized).
  static const AlphabetSpec& CaPcd();
  // Resolves "msa_pc" / "ca_pcd". Returns nullptr for unknown names.
  static const AlphabetSpec* FromPresetName(std::string_view name);

  CharClass Classify(char32_t c) const;

  // Permitted = usable in a transcript under this spec: base letters,
  // punctuation, space/newline, and diacritics when included.
  bool IsPermitted(char32_t c) const;

  bool include_diacritics() const { return include_diacritics_; }
  const std::unordered_set<char32_t>& base_letters() const {
    return base_letters_;
  }
  const std::unordered_set<char32_t>& diacritics() const { return diacritics_; }
  const std::unordered_set<char32_t>& punctuation() const {
    return punctuation_;
  }

  explicit AlphabetSpec(bool include_diacritics);

 private:
  std::unordered_set<char32_t> base_letters_;
  std::unordered_set<char32_t> diacritics_;
  std::unordered_set<char32_t> punctuation_;
  bool include_diacritics_;
};

struct LetterNormRules {
  bool fold_alif = false;        // أ إ آ -> ا
  bool fold_ta_marbuta = false;  // ة -> ه
  bool fold_alif_maksura = false;  // ى -> ي

  static LetterNormRules None() { return {}; }
  static LetterNormRules MascEval() { return {true, true, false}; }
  static LetterNormRules MediaspeechEval() { return {true, true, true}; }
  // Resolves "none" / "masc_eval" / "mediaspeech_eval".
  static std::optional<LetterNormRules> FromPresetName(std::string_view name);

  char32_t Apply(char32_t c) const;
};

bool IsDiacritic(char32_t c);
bool IsArabicPunctuation(char32_t c);
bool IsAnyDigit(char32_t c);  // ASCII, Arabic-Indic, extended Arabic-Indic

CharClass ClassifyChar(char32_t c, const AlphabetSpec& spec);

// Removes the 8 diacritic scalars; everything else is preserved in order.
std::u32string StripDiacritics(std::u32string_view text);
std::string StripDiacritics(std::string_view utf8);

// Removes the 3 punctuation scalars, collapses resulting whitespace runs to
// a single space and trims.
std::u32string StripPunctuation(std::u32string_view text);
std::string StripPunctuation(std::string_view utf8);

std::u32string LetterNormalize(std::u32string_view text,
                               const LetterNormRules& rules);
std::string LetterNormalize(std::string_view utf8,
                            const LetterNormRules& rules);

struct OutOfAlphabet {
  size_t offset;  // scalar index, not byte index
  char32_t scalar;
};

// First scalar not permitted under the spec, or nullopt when all pass.
std::optional<OutOfAlphabet> FindOutOfAlphabet(std::u32string_view text,
                                               const AlphabetSpec& spec);
std::optional<OutOfAlphabet> FindOutOfAlphabet(std::string_view utf8,
                                               const AlphabetSpec& spec);

}  // namespace arcorpus

#endif  // ARCORPUS_ALPHABET_HPP_
