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

#ifndef ARCORPUS_PIPELINE_HPP_
#define ARCORPUS_PIPELINE_HPP_

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "arcorpus/alphabet.hpp"
#include "arcorpus/normalize.hpp"

namespace arcorpus {

struct StepConfig {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
};

// Declarative pipeline: ordered steps plus global settings. FromJson
// validates every step name and parameter before any data is read.
struct PipelineConfig {
  int workers = 1;
  std::string alphabet_preset = "msa_pc";
  std::string audit_path;  // optional; CLI --audit overrides
  std::vector<StepConfig> steps;

  static PipelineConfig FromJson(const nlohmann::json& j);
  static PipelineConfig FromFile(const std::string& path);
};

struct PipelineSummary {
  size_t lines_in = 0;
  size_t kept = 0;
  size_t dropped = 0;
  double kept_hours = 0;
  // One entry per configured step, in order: (step name, drop count).
  std::vector<std::pair<std::string, size_t>> drops_per_step;
  size_t hypothesis_missing = 0;  // samples the hypothesis step had to skip
  double elapsed_seconds = 0;
  double lines_per_second = 0;
};

// Applies steps in order; kept samples preserve input order; audit lines get
// drop_reason/drop_detail fields. Deterministic for any worker count.
PipelineSummary RunPipeline(const PipelineConfig& cfg, std::istream& in,
                            std::ostream& out, std::ostream* audit);

std::string SummaryToString(const PipelineSummary& summary);

// --- Corpus statistics ----------------------------------------------------

enum class DiacClass { kNone, kPartial, kFull, kMix };

const char* DiacClassName(DiacClass c);

struct StatsReport {
  size_t sample_count = 0;
  double total_hours = 0;
  std::map<int, size_t> duration_histogram;  // 1 s buckets, floor(duration)
  double diacritization_ratio = 0;  // fraction of words with >= 1 diacritic
  DiacClass diacritization_class = DiacClass::kNone;
  std::map<std::string, size_t> punctuation_counts;       // per canonical mark
  std::map<uint32_t, size_t> out_of_alphabet_counts;      // scalar -> freq
};

// Single pass. Out-of-alphabet counting uses `spec`; class thresholds:
// None < 1%, Full > 80%, Mix when per-sample ratio mass below 0.1 and above
// 0.9 both reach 20%.
StatsReport ComputeStats(std::istream& in, const AlphabetSpec& spec);

std::string StatsToTable(const StatsReport& report);
nlohmann::json StatsToJson(const StatsReport& report);

}  // namespace arcorpus

#endif  // ARCORPUS_PIPELINE_HPP_
