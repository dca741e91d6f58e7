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

#include <cmath>
#include <cstdio>
#include <sstream>

#include "arcorpus/manifest.hpp"
#include "arcorpus/pipeline.hpp"
#include "arcorpus/unicode.hpp"

namespace arcorpus {

const char* DiacClassName(DiacClass c) {
  switch (c) {
    case DiacClass::kNone:
      return "none";
    case DiacClass::kPartial:
      return "partial";
    case DiacClass::kFull:
      return "full";
    case DiacClass::kMix:
      return "mix";
  }
  return "?";
}

StatsReport ComputeStats(std::istream& in, const AlphabetSpec& spec) {
  StatsReport report;
  size_t total_words = 0;
  size_t diacritized_words = 0;
  size_t samples_with_words = 0;
  size_t low_ratio_samples = 0;   // per-sample ratio < 0.1
  size_t high_ratio_samples = 0;  // per-sample ratio > 0.9

  ManifestReader reader(in);
  Sample s;
  while (reader.Next(&s)) {
    ++report.sample_count;
    report.total_hours += s.duration / 3600.0;
    ++report.duration_histogram[static_cast<int>(std::floor(s.duration))];

    const std::u32string scalars = Utf8Decode(s.text);
    size_t words = 0;
    size_t diac_words = 0;
    bool in_word = false;
    bool word_has_diac = false;
    auto close_word = [&] {
      if (in_word) {
        ++words;
        if (word_has_diac) ++diac_words;
      }
      in_word = false;
      word_has_diac = false;
    };
    for (char32_t c : scalars) {
      if (IsAsciiSpace(c)) {
        close_word();
        continue;
      }
      in_word = true;
      if (IsDiacritic(c)) word_has_diac = true;
      if (IsArabicPunctuation(c)) {
        ++report.punctuation_counts[Utf8Encode(std::u32string(1, c))];
      }
      if (!spec.IsPermitted(c)) {
        ++report.out_of_alphabet_counts[static_cast<uint32_t>(c)];
      }
    }
    close_word();
    total_words += words;
    diacritized_words += diac_words;
    if (words > 0) {
      ++samples_with_words;
      const double ratio =
          static_cast<double>(diac_words) / static_cast<double>(words);
      if (ratio < 0.1) ++low_ratio_samples;
      if (ratio > 0.9) ++high_ratio_samples;
    }
  }

  report.diacritization_ratio =
      total_words > 0 ? static_cast<double>(diacritized_words) /
                            static_cast<double>(total_words)
                      : 0.0;
  if (samples_with_words > 0 &&
      low_ratio_samples >= 0.2 * samples_with_words &&
      high_ratio_samples >= 0.2 * samples_with_words) {
    report.diacritization_class = DiacClass::kMix;
  } else if (report.diacritization_ratio < 0.01) {
    report.diacritization_class = DiacClass::kNone;
  } else if (report.diacritization_ratio > 0.8) {
    report.diacritization_class = DiacClass::kFull;
  } else {
    report.diacritization_class = DiacClass::kPartial;
  }
  return report;
}

std::string StatsToTable(const StatsReport& report) {
  std::ostringstream os;
  os << "samples:               " << report.sample_count << '\n';
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", report.total_hours);
  os << "total hours:           " << buf << '\n';
  std::snprintf(buf, sizeof(buf), "%.4f", report.diacritization_ratio);
  os << "diacritization ratio:  " << buf << '\n';
  os << "diacritization class:  " << DiacClassName(report.diacritization_class)
     << '\n';
  os << "punctuation counts:\n";
  for (const auto& [mark, count] : report.punctuation_counts) {
    os << "  " << mark << "  " << count << '\n';
  }
  os << "duration histogram (1 s buckets):\n";
  for (const auto& [bucket, count] : report.duration_histogram) {
    os << "  [" << bucket << ", " << bucket + 1 << ")  " << count << '\n';
  }
  if (!report.out_of_alphabet_counts.empty()) {
    os << "out-of-alphabet scalars:\n";
    for (const auto& [cp, count] : report.out_of_alphabet_counts) {
      std::snprintf(buf, sizeof(buf), "U+%04X", cp);
      os << "  " << buf << "  " << count << '\n';
    }
  }
  return os.str();
}

nlohmann::json StatsToJson(const StatsReport& report) {
  nlohmann::json j;
  j["sample_count"] = report.sample_count;
  j["total_hours"] = report.total_hours;
  j["diacritization_ratio"] = report.diacritization_ratio;
  j["diacritization_class"] = DiacClassName(report.diacritization_class);
  j["punctuation_counts"] = report.punctuation_counts;
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [bucket, count] : report.duration_histogram) {
    hist[std::to_string(bucket)] = count;
  }
  j["duration_histogram"] = hist;
  nlohmann::json ooa = nlohmann::json::object();
  for (const auto& [cp, count] : report.out_of_alphabet_counts) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "U+%04X", cp);
    ooa[buf] = count;
  }
  j["out_of_alphabet"] = ooa;
  return j;
}

}  // namespace arcorpus
