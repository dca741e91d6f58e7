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

#include "arcorpus/manifest.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "test_util.hpp"

using namespace arcorpus;
using testutil::U;

TEST_CASE("parse basic line") {
  const Sample s = ParseManifestLine(
      R"({"audio_filepath":"a.wav","duration":1.5,"text":"abc"})", 1);
  CHECK(s.audio_filepath == "a.wav");
  CHECK(s.duration == 1.5);
  CHECK(s.text == "abc");
  CHECK(!s.pred_text);
  CHECK(!s.offset);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(ParseManifestLine("{truncated", 7),
                       doctest::Contains("line 7"), ManifestError);
  CHECK_THROWS_WITH_AS(
      ParseManifestLine(R"({"audio_filepath":"a.wav","duration":1.0})", 3),
      doctest::Contains("text"), ManifestError);
  CHECK_THROWS_AS(
      ParseManifestLine(R"({"audio_filepath":1,"duration":1,"text":""})", 1),
      ManifestError);
  CHECK_THROWS_AS(ParseManifestLine("[1,2]", 1), ManifestError);
}

TEST_CASE("serialized field order is fixed") {
  Sample s;
  s.audio_filepath = "x.wav";
  s.offset = 1.25;
  s.duration = 3.5;
  s.text = "t";
  s.pred_text = "p";
  const std::string line = SerializeSample(s);
  CHECK(line ==
        R"({"audio_filepath":"x.wav","offset":1.25,"duration":3.5,"text":"t","pred_text":"p"})");
}

TEST_CASE("arabic text survives serialization as plain UTF-8") {
  Sample s;
  s.audio_filepath = "x.wav";
  s.duration = 1;
  s.text = U({0x0628, 0x064E, 0x0627});
  const std::string line = SerializeSample(s);
  CHECK(line.find(U({0x0628, 0x064E, 0x0627})) != std::string::npos);
  CHECK(ParseManifestLine(line, 1).text == s.text);
}

TEST_CASE("write/read round trip") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> dur(0.01, 30.0);
  std::vector<Sample> samples;
  for (int i = 0; i < 1000; ++i) {
    Sample s;
    s.audio_filepath = "clip_" + std::to_string(i) + ".wav";
    s.duration = dur(rng);
    s.text = Utf8Encode(testutil::RandomBareSentence(rng));
    if (i % 3 == 0) s.pred_text = Utf8Encode(testutil::RandomBareSentence(rng));
    if (i % 5 == 0) s.offset = dur(rng);
    samples.push_back(std::move(s));
  }
  std::stringstream buf;
  CHECK(WriteManifest(samples, buf) == samples.size());
  const std::vector<Sample> back = ReadManifest(buf);
  REQUIRE(back.size() == samples.size());
  for (size_t i = 0; i < samples.size(); ++i) CHECK(back[i] == samples[i]);
}

TEST_CASE("empty and truncated input") {
  std::stringstream empty;
  CHECK(ReadManifest(empty).empty());

  std::stringstream bad;
  bad << R"({"audio_filepath":"a.wav","duration":1,"text":"x"})" << "\n";
  bad << R"({"audio_filepath":"b.wav","dur)";
  try {
    ReadManifest(bad);
    FAIL("expected ManifestError");
  } catch (const ManifestError& e) {
    CHECK(e.line() == 2);
  }
}
