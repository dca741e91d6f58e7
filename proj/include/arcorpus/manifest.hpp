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

#ifndef ARCORPUS_MANIFEST_HPP_
#define ARCORPUS_MANIFEST_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcorpus {

// One manifest line. `offset` is seconds into the source audio for samples
// produced by subtitle segmentation.
struct Sample {
  std::string audio_filepath;
  std::optional<double> offset;
  double duration = 0;
  std::string text;
  std::optional<std::string> pred_text;
  std::optional<std::string> source;  // provenance tag

  bool operator==(const Sample&) const = default;
};

class ManifestError : public std::runtime_error {
 public:
  ManifestError(const std::string& what, size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

// Parses one manifest line. Throws ManifestError on malformed input or a
// missing/ill-typed required field; `line_no` is used for error context.
Sample ParseManifestLine(const std::string& line, size_t line_no);

// Serializes with fixed field order: audio_filepath, offset?, duration,
// text, pred_text?, source?. Appends extra fields (e.g. drop_reason) last.
std::string SerializeSample(
    const Sample& s,
    const std::vector<std::pair<std::string, std::string>>& extra = {});

// Streaming line reader; yields (line_no, Sample).
class ManifestReader {
 public:
  explicit ManifestReader(std::istream& in) : in_(in) {}
  // Returns false at end of stream.
  bool Next(Sample* out);
  size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  size_t line_no_ = 0;
};

std::vector<Sample> ReadManifest(std::istream& in);
std::vector<Sample> ReadManifestFile(const std::string& path);

size_t WriteManifest(const std::vector<Sample>& samples, std::ostream& out);
size_t WriteManifestFile(const std::vector<Sample>& samples,
                         const std::string& path);

}  // namespace arcorpus

#endif  // ARCORPUS_MANIFEST_HPP_
