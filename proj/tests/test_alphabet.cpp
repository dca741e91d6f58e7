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

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace arcorpus;
using testutil::U;

TEST_CASE("alphabet cardinalities") {
  const AlphabetSpec& spec = AlphabetSpec::MsaPc();
  CHECK(spec.base_letters().size() == 36);
  CHECK(spec.diacritics().size() == 8);
  CHECK(spec.punctuation().size() == 3);
  CHECK(spec.base_letters().size() + spec.diacritics().size() == 44);

  // Pairwise disjoint.
  for (char32_t c : spec.base_letters()) {
    CHECK(!spec.diacritics().count(c));
    CHECK(!spec.punctuation().count(c));
  }
  for (char32_t c : spec.diacritics()) CHECK(!spec.punctuation().count(c));
  CHECK(!spec.base_letters().count(U' '));
  CHECK(!spec.diacritics().count(U' '));
  CHECK(!spec.punctuation().count(U' '));
}

TEST_CASE("classify_char") {
  const AlphabetSpec& spec = AlphabetSpec::MsaPc();
  CHECK(spec.Classify(0x0628) == CharClass::kBaseLetter);  // Ba
  CHECK(spec.Classify(0x064E) == CharClass::kDiacritic);   // Fathah
  CHECK(spec.Classify(U'A') == CharClass::kOther);
  CHECK(spec.Classify(U' ') == CharClass::kSpace);
  CHECK(spec.Classify(U'\n') == CharClass::kSpace);
  CHECK(spec.Classify(U'\t') == CharClass::kOther);
  CHECK(spec.Classify(U'7') == CharClass::kDigit);
  CHECK(spec.Classify(0x0663) == CharClass::kDigit);  // Arabic-Indic 3
  CHECK(spec.Classify(0x06F3) == CharClass::kDigit);  // extended form
  CHECK(spec.Classify(0x061F) == CharClass::kPunctuation);
  CHECK(spec.Classify(0x0640) == CharClass::kOther);  // kasheeda
}

TEST_CASE("strip_diacritics") {
  CHECK(StripDiacritics(U({0x0628, 0x064E, 0x0627, 0x0628})) ==
        U({0x0628, 0x0627, 0x0628}));
  CHECK(StripDiacritics(std::string_view("")) == "");
  CHECK(StripDiacritics(U({0x0644, 0x0651, 0x064E, 0x0647})) ==
        U({0x0644, 0x0647}));
}

TEST_CASE("strip_punctuation") {
  CHECK(StripPunctuation(U({0x0645, 0x060C, 0x0020, 0x0645})) ==
        U({0x0645, 0x0020, 0x0645}));
  CHECK(StripPunctuation(U({0x061F})) == "");
  CHECK(StripPunctuation(U({0x0645, 0x002E})) == U({0x0645}));
}

TEST_CASE("letter_normalize") {
  LetterNormRules alif;
  alif.fold_alif = true;
  CHECK(LetterNormalize(U({0x0623}), alif) == U({0x0627}));
  CHECK(LetterNormalize(U({0x0625}), alif) == U({0x0627}));
  CHECK(LetterNormalize(U({0x0622}), alif) == U({0x0627}));
  // Disabled rules must not fire.
  CHECK(LetterNormalize(U({0x0629}), alif) == U({0x0629}));

  LetterNormRules ta;
  ta.fold_ta_marbuta = true;
  CHECK(LetterNormalize(U({0x0629}), ta) == U({0x0647}));

  LetterNormRules maksura;
  maksura.fold_alif_maksura = true;
  CHECK(LetterNormalize(U({0x0649}), maksura) == U({0x064A}));

  const LetterNormRules ms = LetterNormRules::MediaspeechEval();
  CHECK(ms.fold_alif);
  CHECK(ms.fold_ta_marbuta);
  CHECK(ms.fold_alif_maksura);
  const LetterNormRules masc = LetterNormRules::MascEval();
  CHECK(masc.fold_alif);
  CHECK(masc.fold_ta_marbuta);
  CHECK(!masc.fold_alif_maksura);
}

TEST_CASE("find_out_of_alphabet") {
  const AlphabetSpec& msa = AlphabetSpec::MsaPc();
  CHECK(!FindOutOfAlphabet(U({0x0628, 0x0020, 0x0628}), msa));
  auto hit = FindOutOfAlphabet(U({0x0628, U'A'}), msa);
  REQUIRE(hit);
  CHECK(hit->offset == 1);
  CHECK(hit->scalar == U'A');
  auto diac = FindOutOfAlphabet(U({0x0628, 0x064E}), msa);
  REQUIRE(diac);
  CHECK(diac->offset == 1);
  CHECK(diac->scalar == 0x064E);
  // Diacritics pass under the 44-symbol spec.
  CHECK(!FindOutOfAlphabet(U({0x0628, 0x064E}), AlphabetSpec::CaPcd()));
}

TEST_CASE("transform properties on fuzzed text") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> len(0, 30);
  std::vector<char32_t> pool = testutil::BaseLetterPool();
  for (char32_t d : testutil::DiacriticPool()) pool.push_back(d);
  pool.push_back(U' ');
  pool.push_back(0x002E);
  pool.push_back(0x061F);
  pool.push_back(0x060C);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  const LetterNormRules rules = LetterNormRules::MediaspeechEval();

  for (int iter = 0; iter < 2000; ++iter) {
    std::u32string s;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) s.push_back(pool[pick(rng)]);

    // Idempotence.
    CHECK(StripDiacritics(StripDiacritics(s)) == StripDiacritics(s));
    CHECK(StripPunctuation(StripPunctuation(s)) == StripPunctuation(s));
    CHECK(LetterNormalize(LetterNormalize(s, rules), rules) ==
          LetterNormalize(s, rules));

    // Stripping commutes with letter normalization.
    CHECK(StripDiacritics(LetterNormalize(s, rules)) ==
          LetterNormalize(StripDiacritics(s), rules));

    // Anything passing the 44-symbol spec passes the 36-symbol spec once
    // diacritics are stripped.
    if (!FindOutOfAlphabet(s, AlphabetSpec::CaPcd())) {
      CHECK(!FindOutOfAlphabet(StripDiacritics(s), AlphabetSpec::MsaPc()));
    }
  }
}
