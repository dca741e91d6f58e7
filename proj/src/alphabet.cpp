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

#include "arcorpus/alphabet.hpp"

#include "arcorpus/unicode.hpp"

namespace arcorpus {

namespace {

// 28 primary letters.
constexpr char32_t kPrimaryLetters[] = {
    0x0627,  // ا Alif
    0x0628,  // ب Ba
    0x062A,  // ت Ta
    0x062B,  // ث Tha
    0x062C,  // ج Jim
    0x062D,  // ح Hha
    0x062E,  // خ Kha
    0x062F,  // د Dal
    0x0630,  // ذ Dhal
    0x0631,  // ر Ra
    0x0632,  // ز Zay
    0x0633,  // س Sin
    0x0634,  // ش Shin
    0x0635,  // ص Sad
    0x0636,  // ض Dad
    0x0637,  // ط Tta
    0x0638,  // ظ Dha
    0x0639,  // ع Ayn
    0x063A,  // غ Ghayn
    0x0641,  // ف Fa
    0x0642,  // ق Qaf
    0x0643,  // ك Kaf
    0x0644,  // ل Lam
    0x0645,  // م Mim
    0x0646,  // ن Nun
    0x0647,  // ه Ha
    0x0648,  // و Waw
    0x064A,  // ي Ya
};

constexpr char32_t kHamzaForms[] = {0x0621, 0x0623, 0x0625,
                                    0x0624, 0x0626, 0x0622};
constexpr char32_t kTaMarbuta = 0x0629;
constexpr char32_t kAlifMaksura = 0x0649;

constexpr char32_t kDiacritics[] = {
    0x064E,  // Fathah
    0x0650,  // Kasrah
    0x064F,  // Dammah
    0x0652,  // Sukun
    0x0651,  // Shaddah
    0x064B,  // Fathatan
    0x064C,  // Dammatan
    0x064D,  // Kasratan
};

constexpr char32_t kPunctuation[] = {0x002E, 0x061F, 0x060C};

}  // namespace

AlphabetSpec::AlphabetSpec(bool include_diacritics)
    : include_diacritics_(include_diacritics) {
  for (char32_t c : kPrimaryLetters) base_letters_.insert(c);
  for (char32_t c : kHamzaForms) base_letters_.insert(c);
  base_letters_.insert(kTaMarbuta);
  base_letters_.insert(kAlifMaksura);
  for (char32_t c : kDiacritics) diacritics_.insert(c);
  for (char32_t c : kPunctuation) punctuation_.insert(c);
}

const AlphabetSpec& AlphabetSpec::MsaPc() {
  static const AlphabetSpec spec(false);
  return spec;
}

const AlphabetSpec& AlphabetSpec::CaPcd() {
  static const AlphabetSpec spec(true);
  return spec;
}

const AlphabetSpec* AlphabetSpec::FromPresetName(std::string_view name) {
  if (name == "msa_pc") return &MsaPc();
  if (name == "ca_pcd") return &CaPcd();
  return nullptr;
}

bool IsDiacritic(char32_t c) {
  switch (c) {
    case 0x064B:
    case 0x064C:
    case 0x064D:
    case 0x064E:
    case 0x064F:
    case 0x0650:
    case 0x0651:
    case 0x0652:
      return true;
    default:
      return false;
  }
}

bool IsArabicPunctuation(char32_t c) {
  return c == 0x002E || c == 0x061F || c == 0x060C;
}

bool IsAnyDigit(char32_t c) {
  return (c >= U'0' && c <= U'9') || (c >= 0x0660 && c <= 0x0669) ||
         (c >= 0x06F0 && c <= 0x06F9);
}

CharClass AlphabetSpec::Classify(char32_t c) const {
  if (c == U' ' || c == U'\n') return CharClass::kSpace;
  if (base_letters_.count(c)) return CharClass::kBaseLetter;
  if (diacritics_.count(c)) return CharClass::kDiacritic;
  if (punctuation_.count(c)) return CharClass::kPunctuation;
  if (IsAnyDigit(c)) return CharClass::kDigit;
  return CharClass::kOther;
}

bool AlphabetSpec::IsPermitted(char32_t c) const {
  switch (Classify(c)) {
    case CharClass::kBaseLetter:
    case CharClass::kPunctuation:
    case CharClass::kSpace:
      return true;
    case CharClass::kDiacritic:
      return include_diacritics_;
    default:
      return false;
  }
}

CharClass ClassifyChar(char32_t c, const AlphabetSpec& spec) {
  return spec.Classify(c);
}

std::optional<LetterNormRules> LetterNormRules::FromPresetName(
    std::string_view name) {
  if (name == "none" || name.empty()) return None();
  if (name == "masc_eval") return MascEval();
  if (name == "mediaspeech_eval") return MediaspeechEval();
  return std::nullopt;
}

char32_t LetterNormRules::Apply(char32_t c) const {
  if (fold_alif && (c == 0x0623 || c == 0x0625 || c == 0x0622)) return 0x0627;
  if (fold_ta_marbuta && c == 0x0629) return 0x0647;
  if (fold_alif_maksura && c == 0x0649) return 0x064A;
  return c;
}

std::u32string StripDiacritics(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (!IsDiacritic(c)) out.push_back(c);
  }
  return out;
}

std::string StripDiacritics(std::string_view utf8) {
  return Utf8Encode(StripDiacritics(Utf8Decode(utf8)));
}

std::u32string StripPunctuation(std::u32string_view text) {
  std::u32string no_punct;
  no_punct.reserve(text.size());
  for (char32_t c : text) {
    if (!IsArabicPunctuation(c)) no_punct.push_back(c);
  }
  return CollapseWhitespace(no_punct);
}

std::string StripPunctuation(std::string_view utf8) {
  return Utf8Encode(StripPunctuation(Utf8Decode(utf8)));
}

std::u32string LetterNormalize(std::u32string_view text,
                               const LetterNormRules& rules) {
  std::u32string out(text);
  for (char32_t& c : out) c = rules.Apply(c);
  return out;
}

std::string LetterNormalize(std::string_view utf8,
                            const LetterNormRules& rules) {
  return Utf8Encode(LetterNormalize(Utf8Decode(utf8), rules));
}

std::optional<OutOfAlphabet> FindOutOfAlphabet(std::u32string_view text,
                                               const AlphabetSpec& spec) {
  for (size_t i = 0; i < text.size(); ++i) {
    if (!spec.IsPermitted(text[i])) return OutOfAlphabet{i, text[i]};
  }
  return std::nullopt;
}

std::optional<OutOfAlphabet> FindOutOfAlphabet(std::string_view utf8,
                                               const AlphabetSpec& spec) {
  return FindOutOfAlphabet(Utf8Decode(utf8), spec);
}

}  // namespace arcorpus
