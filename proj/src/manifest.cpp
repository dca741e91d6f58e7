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

#include <fstream>

#include "json.hpp"

namespace arcorpus {

using ordered_json = nlohmann::ordered_json;

Sample ParseManifestLine(const std::string& line, size_t line_no) {
  ordered_json j = ordered_json::parse(line, nullptr, false);
  if (j.is_discarded()) {
    throw ManifestError("malformed manifest line", line_no);
  }
  if (!j.is_object()) {
    throw ManifestError("manifest line is not an object", line_no);
  }
  Sample s;
  auto require = [&](const char* field) -> const ordered_json& {
    auto it = j.find(field);
    if (it == j.end()) {
      throw ManifestError(std::string("missing required field '") + field +
                              "'",
                          line_no);
    }
    return *it;
  };
  const auto& path = require("audio_filepath");
  if (!path.is_string()) {
    throw ManifestError("field 'audio_filepath' must be a string", line_no);
  }
  s.audio_filepath = path.get<std::string>();
  const auto& dur = require("duration");
  if (!dur.is_number()) {
    throw ManifestError("field 'duration' must be a number", line_no);
  }
  s.duration = dur.get<double>();
  const auto& text = require("text");
  if (!text.is_string()) {
    throw ManifestError("field 'text' must be a string", line_no);
  }
  s.text = text.get<std::string>();
  if (auto it = j.find("offset"); it != j.end() && !it->is_null()) {
    if (!it->is_number()) {
      throw ManifestError("field 'offset' must be a number", line_no);
    }
    s.offset = it->get<double>();
  }
  if (auto it = j.find("pred_text"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) {
      throw ManifestError("field 'pred_text' must be a string", line_no);
    }
    s.pred_text = it->get<std::string>();
  }
  if (auto it = j.find("source"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) {
      throw ManifestError("field 'source' must be a string", line_no);
    }
    s.source = it->get<std::string>();
  }
  return s;
}

std::string SerializeSample(
    const Sample& s,
    const std::vector<std::pair<std::string, std::string>>& extra) {
  ordered_json j;
  j["audio_filepath"] = s.audio_filepath;
  if (s.offset) j["offset"] = *s.offset;
  j["duration"] = s.duration;
  j["text"] = s.text;
  if (s.pred_text) j["pred_text"] = *s.pred_text;
  if (s.source) j["source"] = *s.source;
  for (const auto& [k, v] : extra) j[k] = v;
  return j.dump();
}

bool ManifestReader::Next(Sample* out) {
  std::string line;
  if (!std::getline(in_, line)) return false;
  ++line_no_;
  *out = ParseManifestLine(line, line_no_);
  return true;
}

std::vector<Sample> ReadManifest(std::istream& in) {
  std::vector<Sample> out;
  ManifestReader reader(in);
  Sample s;
  while (reader.Next(&s)) out.push_back(std::move(s));
  return out;
}

std::vector<Sample> ReadManifestFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  return ReadManifest(in);
}

size_t WriteManifest(const std::vector<Sample>& samples, std::ostream& out) {
  for (const Sample& s : samples) out << SerializeSample(s) << '\n';
  if (!out) throw std::runtime_error("manifest write failed");
  return samples.size();
}

size_t WriteManifestFile(const std::vector<Sample>& samples,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  const size_t n = WriteManifest(samples, out);
  out.flush();
  if (!out) throw std::runtime_error("manifest write failed: " + path);
  return n;
}

}  // namespace arcorpus
