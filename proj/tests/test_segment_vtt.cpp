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

#include "arcorpus/segment_vtt.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace arcorpus;
using testutil::U;

TEST_CASE("parse single cue") {
  const std::string content =
      "WEBVTT\n\n00:00:01.000 --> 00:00:02.500\n" + U({0x0628}) + "\n";
  const std::vector<Cue> cues = ParseVtt(content);
  REQUIRE(cues.size() == 1);
  CHECK(cues[0].start == doctest::Approx(1.0));
  CHECK(cues[0].end == doctest::Approx(2.5));
  CHECK(cues[0].text == U({0x0628}));
}

TEST_CASE("short timestamp form and settings") {
  const std::string content =
      "WEBVTT\n\n01:02.000 --> 01:03.000 align:start position:0%\nhi\n";
  const std::vector<Cue> cues = ParseVtt(content);
  REQUIRE(cues.size() == 1);
  CHECK(cues[0].start == doctest::Approx(62.0));
  CHECK(cues[0].end == doctest::Approx(63.0));
}

TEST_CASE("cue identifiers, NOTE blocks, markup, multi-line payload") {
  const std::string content =
      "WEBVTT - title\n"
      "\n"
      "NOTE this block\nis skipped\n"
      "\n"
      "cue-1\n"
      "00:00:00.000 --> 00:00:01.000\n"
      "<v Speaker>line one</v>\n"
      "line two\n"
      "\n"
      "00:01:00.000 --> 00:01:30.500\n"
      "second\n";
  const std::vector<Cue> cues = ParseVtt(content);
  REQUIRE(cues.size() == 2);
  CHECK(cues[0].text == "line one line two");
  CHECK(cues[1].start == doctest::Approx(60.0));
  CHECK(cues[1].end == doctest::Approx(90.5));
}

TEST_CASE("parse errors") {
  try {
    ParseVtt("WEBVTT\n\nnot-a-timestamp\n");
    FAIL("expected VttParseError");
  } catch (const VttParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(ParseVtt("no header\n"), VttParseError);
  CHECK_THROWS_AS(ParseVtt("WEBVTT\n\n00:00:xx.000 --> 00:00:01.000\nhi\n"),
                  VttParseError);
  CHECK_THROWS_AS(ParseVtt("WEBVTT\n\n00:00:02.000 --> 00:00:01.000\nhi\n"),
                  VttParseError);
  // BOM is tolerated.
  CHECK_NOTHROW(ParseVtt("\xEF\xBB\xBFWEBVTT\n"));
}

TEST_CASE("greedy packing under the duration cap") {
  std::vector<Cue> cues = {
      {0, 8, "a"}, {8, 16, "b"}, {16, 24, "c"}};
  const std::vector<Segment> segments = PackCues(cues);
  REQUIRE(segments.size() == 2);
  CHECK(segments[0].start == 0);
  CHECK(segments[0].end == 16);
  CHECK(segments[0].cue_count == 2);
  CHECK(segments[0].text == "a b");
  CHECK(segments[1].start == 16);
  CHECK(segments[1].cue_count == 1);

  // Oversize single cue passes through for downstream filtering.
  const std::vector<Segment> oversize = PackCues({{0, 25, "big"}});
  REQUIRE(oversize.size() == 1);
  CHECK(oversize[0].end - oversize[0].start == doctest::Approx(25));

  CHECK(PackCues({}).empty());
}

TEST_CASE("max gap closes segments") {
  PackOptions opts;
  opts.max_gap = 1.0;
  const std::vector<Segment> segments =
      PackCues({{0, 2, "a"}, {5, 6, "b"}}, opts);
  CHECK(segments.size() == 2);
}

TEST_CASE("packing properties on fuzzed cue lists") {
  std::mt19937 rng(555);
  std::uniform_real_distribution<double> gap(0.0, 3.0);
  std::uniform_real_distribution<double> dur(0.2, 9.0);
  std::uniform_int_distribution<int> count(0, 40);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<Cue> cues;
    double t = 0;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      t += gap(rng);
      const double d = dur(rng);
      cues.push_back({t, t + d, "w" + std::to_string(i)});
      t += d;
    }
    const std::vector<Segment> segments = PackCues(cues);
    CHECK(segments.size() <= cues.size());
    std::string joined_cues, joined_segments;
    for (const Cue& c : cues) {
      if (!joined_cues.empty()) joined_cues += ' ';
      joined_cues += c.text;
    }
    size_t total_cues = 0;
    for (const Segment& s : segments) {
      if (s.cue_count >= 2) {
        CHECK(s.end - s.start <= 20.0 + 1e-9);
      }
      CHECK(s.end > s.start);
      if (!joined_segments.empty()) joined_segments += ' ';
      joined_segments += s.text;
      total_cues += s.cue_count;
    }
    CHECK(total_cues == cues.size());
    CHECK(joined_cues == joined_segments);
  }
}

TEST_CASE("strip_enumeration") {
  CHECK(StripEnumeration("1. " + U({0x0628})) == U({0x0628}));
  CHECK(StripEnumeration(U({0x0661}) + "- " + U({0x0628})) == U({0x0628}));
  const std::string interior = U({0x0628}) + " 3 " + U({0x0628});
  CHECK(StripEnumeration(interior) == interior);
  // Repeated markers.
  CHECK(StripEnumeration("1) 2) " + U({0x0628})) == U({0x0628}));
  // Arabic comma as the marker.
  CHECK(StripEnumeration("12" + U({0x060C}) + " " + U({0x0628})) ==
        U({0x0628}));
  // A bare number with no marker is content.
  CHECK(StripEnumeration("12 " + U({0x0628})) == "12 " + U({0x0628}));
}

TEST_CASE("segments_to_samples") {
  const std::vector<Sample> samples = SegmentsToSamples(
      {{1.23456, 7.89123, "text", 2}}, "video1");
  REQUIRE(samples.size() == 1);
  CHECK(samples[0].audio_filepath == "video1");
  CHECK(*samples[0].offset == doctest::Approx(1.235).epsilon(1e-9));
  CHECK(samples[0].duration == doctest::Approx(6.657).epsilon(1e-9));
  CHECK(samples[0].text == "text");
}
