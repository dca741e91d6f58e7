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

#ifndef ARCORPUS_UNICODE_HPP_
#define ARCORPUS_UNICODE_HPP_

#include <string>
#include <string_view>

namespace arcorpus {

// Decodes UTF-8 into a scalar sequence. Invalid byte sequences are replaced
// with U+FFFD (one replacement per offending byte) so that downstream
// alphabet checks reject the sample instead of the decoder aborting a run.
std::u32string Utf8Decode(std::string_view utf8);

std::string Utf8Encode(std::u32string_view scalars);

// NFKC normal form of a UTF-8 string (ICU-backed).
std::string NfkcNormalize(std::string_view utf8);

inline bool IsAsciiSpace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v';
}

// Collapses every whitespace run to a single U+0020 and trims both ends.
std::u32string CollapseWhitespace(std::u32string_view text);

}  // namespace arcorpus

#endif  // ARCORPUS_UNICODE_HPP_
