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

#include "arcorpus/normalize.hpp"

#include "arcorpus/alphabet.hpp"
#include "arcorpus/unicode.hpp"

namespace arcorpus {

namespace {
constexpr char32_t kKasheeda = 0x0640;
}  // namespace

void NormalizeConfig::Validate() const {
  for (const auto& [from, to] : punct_map) {
    if (!IsArabicPunctuation(to)) {
      throw ConfigError("punct_map target U+" + std::to_string(to) +
                        " is not a canonical punctuation mark");
    }
    if (rare_punct_removals.count(from)) {
      throw ConfigError(
          "punct_map source also listed in rare_punct_removals");
    }
  }
}

std::u32string ConvertEasternDigits(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& c : out) {
    if (c >= 0x0660 && c <= 0x0669) {
      c = U'0' + (c - 0x0660);
    } else if (c >= 0x06F0 && c <= 0x06F9) {
      c = U'0' + (c - 0x06F0);
    }
  }
  return out;
}

std::string ConvertEasternDigits(std::string_view utf8) {
  return Utf8Encode(ConvertEasternDigits(Utf8Decode(utf8)));
}

std::string UnicodeNormalize(std::string_view utf8) {
  return NfkcNormalize(utf8);
}

std::u32string RemoveKasheeda(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (c != kKasheeda) out.push_back(c);
  }
  return out;
}

std::string RemoveKasheeda(std::string_view utf8) {
  return Utf8Encode(RemoveKasheeda(Utf8Decode(utf8)));
}

std::u32string NormalizePunctuation(std::u32string_view text,
                                    const NormalizeConfig& cfg) {
  // Delete rare marks, then fold foreign marks.
  std::u32string mapped;
  mapped.reserve(text.size());
  for (char32_t c : text) {
    if (cfg.rare_punct_removals.count(c)) continue;
    auto it = cfg.punct_map.find(c);
    mapped.push_back(it == cfg.punct_map.end() ? c : it->second);
  }

  std::u32string out;
  out.reserve(mapped.size());
  size_t i = 0;
  while (i < mapped.size()) {
    const char32_t c = mapped[i];
    if (!IsArabicPunctuation(c)) {
      out.push_back(c);
      ++i;
      continue;
    }
    // Whitespace immediately before a canonical mark is dropped.
    while (!out.empty() && IsAsciiSpace(out.back())) out.pop_back();
    out.push_back(c);
    ++i;
    if (cfg.collapse_repeats) {
      // Swallow same-mark repeats, optionally whitespace-separated.
      while (i < mapped.size()) {
        size_t j = i;
        while (j < mapped.size() && IsAsciiSpace(mapped[j])) ++j;
        if (j < mapped.size() && mapped[j] == c) {
          i = j + 1;
        } else {
          break;
        }
      }
    }
  }

  // Deletions may have left double spaces.
  std::u32string squeezed;
  squeezed.reserve(out.size());
  for (char32_t c : out) {
    if (c == U' ' && !squeezed.empty() && squeezed.back() == U' ') continue;
    squeezed.push_back(c);
  }
  return squeezed;
}

std::string NormalizePunctuation(std::string_view utf8,
                                 const NormalizeConfig& cfg) {
  return Utf8Encode(NormalizePunctuation(Utf8Decode(utf8), cfg));
}

std::string NormalizeText(std::string_view utf8, const NormalizeConfig& cfg) {
  std::u32string scalars = ConvertEasternDigits(Utf8Decode(utf8));
  scalars = Utf8Decode(NfkcNormalize(Utf8Encode(scalars)));
  // Kasheeda goes before punctuation handling: a Tatweel sitting next to a
  // mark would otherwise shield it from the spacing and repeat rules and
  // break the fixed point.
  scalars = RemoveKasheeda(scalars);
  scalars = NormalizePunctuation(scalars, cfg);
  // Deletions can juxtapose combining marks out of canonical order (or next
  // to a newly adjacent base), so re-normalize before the final collapse.
  scalars = Utf8Decode(NfkcNormalize(Utf8Encode(scalars)));
  return Utf8Encode(CollapseWhitespace(scalars));
}

}  // namespace arcorpus
