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

#ifndef ARCORPUS_SEGMENT_VTT_HPP_
#define ARCORPUS_SEGMENT_VTT_HPP_

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arcorpus/manifest.hpp"

namespace arcorpus {

struct Cue {
  double start = 0;  // seconds
  double end = 0;
  std::string text;

  bool operator==(const Cue&) const = default;
};

struct Segment {
  double start = 0;
  double end = 0;
  std::string text;  // cue texts joined by single spaces
  size_t cue_count = 0;
};

class VttParseError : public std::runtime_error {
 public:
  VttParseError(const std::string& what, size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

// Parses WebVTT content. Lenient on cue identifiers and NOTE/STYLE blocks,
// strict on the WEBVTT header and timestamp syntax. Inline markup tags are
// removed and multi-line payloads joined with a single space.
std::vector<Cue> ParseVtt(std::string_view content);

struct PackOptions {
  double max_duration = 20.0;
  // Close the current segment when the gap to the next cue exceeds this.
  double max_gap = std::numeric_limits<double>::infinity();
};

// Greedy left-to-right packing: a cue joins the open segment iff the
// wall-clock span stays within max_duration. An oversize single cue becomes
// its own segment (the duration filter removes it downstream).
std::vector<Segment> PackCues(std::vector<Cue> cues,
                              const PackOptions& opts = {});

// Removes leading list markers: digits (ASCII or Eastern) followed by one of
// ". ) - ،" and whitespace, repeated until no match. Interior numbers stay.
std::string StripEnumeration(std::string_view text);

// Manifest lines for one source: audio_filepath = source id, offset and
// duration rounded to 3 decimals.
std::vector<Sample> SegmentsToSamples(const std::vector<Segment>& segments,
                                      const std::string& source_id);

}  // namespace arcorpus

#endif  // ARCORPUS_SEGMENT_VTT_HPP_
