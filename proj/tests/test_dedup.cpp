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

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace arcorpus;
using testutil::U;

namespace {

Sample MakeSample(std::string text) {
  Sample s;
  s.audio_filepath = "a.wav";
  s.duration = 1.0;
  s.text = std::move(text);
  return s;
}

// Sprinkles diacritics/punctuation/spacing noise over a bare sentence.
std::string Perturb(const std::u32string& bare, std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<size_t> pick(
      0, testutil::DiacriticPool().size() - 1);
  std::u32string out;
  for (char32_t c : bare) {
    out.push_back(c);
    if (c != U' ' && coin(rng) == 0) {
      out.push_back(testutil::DiacriticPool()[pick(rng)]);
    }
    if (c == U' ' && coin(rng) == 0) out.push_back(U' ');
  }
  if (coin(rng) == 0) out.push_back(0x002E);
  return Utf8Encode(out);
}

}  // namespace

TEST_CASE("dedup_key composition") {
  const LetterNormRules none;
  CHECK(DedupKey(U({0x0628, 0x064E, 0x060C, 0x0628}), none) ==
        U({0x0628, 0x0628}));
  CHECK(DedupKey("", none) == "");
  CHECK(DedupKey(U({0x061F, 0x002E}), none) == "");

  // Fully diacritized vs bare text share a key.
  std::mt19937 rng(77);
  for (int i = 0; i < 200; ++i) {
    const std::u32string bare = testutil::RandomBareSentence(rng);
    CHECK(DedupKey(Perturb(bare, rng), none) ==
          DedupKey(Utf8Encode(bare), none));
  }

  // Folds apply only when enabled.
  const std::string hamza = U({0x0623, 0x0628});
  const std::string plain_alif = U({0x0627, 0x0628});
  CHECK(DedupKey(hamza, none) != DedupKey(plain_alif, none));
  CHECK(DedupKey(hamza, LetterNormRules::MascEval()) ==
        DedupKey(plain_alif, LetterNormRules::MascEval()));
}

TEST_CASE("remove_overlap") {
  const LetterNormRules none;
  std::vector<Sample> reference = {MakeSample(U({0x0628, 0x0627})),
                                   MakeSample(U({0x0645, 0x0646}))};
  std::vector<Sample> target = {
      MakeSample(U({0x0628, 0x064E, 0x0627})),  // matches ref modulo diacritic
      MakeSample(U({0x0647, 0x0648})),          // disjoint
  };
  const auto keys = BuildKeySet(reference, none);
  const OverlapResult result = RemoveOverlap(target, keys, none);
  CHECK(result.kept.size() == 1);
  CHECK(result.removed.size() == 1);
  CHECK(result.removed[0].text == target[0].text);
  CHECK(result.kept.size() + result.removed.size() == target.size());

  // Second pass removes nothing.
  const OverlapResult again = RemoveOverlap(result.kept, keys, none);
  CHECK(again.removed.empty());

  // Disjoint manifests keep everything.
  const OverlapResult disjoint =
      RemoveOverlap(target, BuildKeySet({}, none), none);
  CHECK(disjoint.kept.size() == target.size());
}

TEST_CASE("empty keys never match") {
  const LetterNormRules none;
  std::vector<Sample> reference = {MakeSample(U({0x002E}))};  // key ""
  std::vector<Sample> target = {MakeSample(U({0x061F}))};     // key ""
  const auto keys = BuildKeySet(reference, none);
  CHECK(keys.empty());
  const OverlapResult result = RemoveOverlap(target, keys, none);
  CHECK(result.removed.empty());
}

TEST_CASE("overlap removal on fuzzed split pairs") {
  std::mt19937 rng(31337);
  const LetterNormRules none;
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<Sample> train, test;
    for (int i = 0; i < 40; ++i) {
      const std::u32string bare = testutil::RandomBareSentence(rng);
      train.push_back(MakeSample(Perturb(bare, rng)));
      // Half the test set shares sentences with train, half is fresh.
      if (i % 2 == 0) {
        test.push_back(MakeSample(Perturb(bare, rng)));
      } else {
        test.push_back(
            MakeSample(Perturb(testutil::RandomBareSentence(rng), rng)));
      }
    }
    const auto train_keys = BuildKeySet(train, none);
    const OverlapResult result = RemoveOverlap(test, train_keys, none);
    CHECK(result.kept.size() + result.removed.size() == test.size());
    // Intersection empty after removal.
    for (const Sample& s : result.kept) {
      const std::string key = DedupKey(s.text, none);
      CHECK((key.empty() || !train_keys.count(key)));
    }
    // Idempotent.
    CHECK(RemoveOverlap(result.kept, train_keys, none).removed.empty());
  }
}
