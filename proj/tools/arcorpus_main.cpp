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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "arcorpus/dedup.hpp"
#include "arcorpus/manifest.hpp"
#include "arcorpus/metrics.hpp"
#include "arcorpus/pipeline.hpp"
#include "arcorpus/segment_vtt.hpp"

namespace fs = std::filesystem;
using namespace arcorpus;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitConfigError = 2;

LetterNormRules ResolveRules(const std::string& preset) {
  auto rules = LetterNormRules::FromPresetName(preset);
  if (!rules) {
    throw ConfigError("unknown letter-norm preset '" + preset + "'");
  }
  return *rules;
}

int RunProcess(const std::string& config_path, const std::string& in_path,
               const std::string& out_path, std::string audit_path,
               int workers_override) {
  PipelineConfig cfg = PipelineConfig::FromFile(config_path);
  if (workers_override > 0) cfg.workers = workers_override;
  if (audit_path.empty()) audit_path = cfg.audit_path;

  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "cannot open input manifest: " << in_path << '\n';
    return kExitDataError;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open output manifest: " << out_path << '\n';
    return kExitDataError;
  }
  std::ofstream audit_file;
  std::ostream* audit = nullptr;
  if (!audit_path.empty()) {
    audit_file.open(audit_path);
    if (!audit_file) {
      std::cerr << "cannot open audit manifest: " << audit_path << '\n';
      return kExitDataError;
    }
    audit = &audit_file;
  }
  const PipelineSummary summary = RunPipeline(cfg, in, out, audit);
  std::cerr << SummaryToString(summary);
  return kExitOk;
}

int RunScore(const std::string& manifest_path, const std::string& mode_name,
             const std::string& letter_norm, bool split_punct,
             bool cer_include_spaces, const std::string& per_sample_path,
             const std::string& format) {
  ScoreOptions opts;
  if (mode_name == "plain") {
    opts.mode = ScoreMode::kPlain;
  } else if (mode_name == "pc") {
    opts.mode = ScoreMode::kPC;
  } else if (mode_name == "pcd") {
    opts.mode = ScoreMode::kPCD;
  } else {
    throw ConfigError("unknown score mode '" + mode_name + "'");
  }
  opts.letter_norm = ResolveRules(letter_norm);
  opts.split_punct = split_punct;
  opts.cer_include_spaces = cer_include_spaces;

  std::ifstream in(manifest_path);
  if (!in) {
    std::cerr << "cannot open manifest: " << manifest_path << '\n';
    return kExitDataError;
  }
  std::vector<std::tuple<std::string, std::string, std::string>> samples;
  ManifestReader reader(in);
  Sample s;
  while (reader.Next(&s)) {
    if (!s.pred_text) {
      throw ManifestError("missing pred_text", reader.line_no());
    }
    samples.emplace_back(s.audio_filepath, s.text, *s.pred_text);
  }
  const ScoreReport report = ScoreCorpus(samples, opts);

  if (!per_sample_path.empty()) {
    std::ofstream ps(per_sample_path);
    if (!ps) {
      std::cerr << "cannot open per-sample output: " << per_sample_path
                << '\n';
      return kExitDataError;
    }
    for (const SampleScore& sample : report.per_sample) {
      nlohmann::ordered_json j;
      j["id"] = sample.id;
      j["wer"] = RoundPercent(sample.wer_percent);
      j["word"] = {{"sub", sample.word.substitutions},
                   {"del", sample.word.deletions},
                   {"ins", sample.word.insertions},
                   {"ref_len", sample.word.ref_len}};
      j["char"] = {{"sub", sample.chr.substitutions},
                   {"del", sample.chr.deletions},
                   {"ins", sample.chr.insertions},
                   {"ref_len", sample.chr.ref_len}};
      ps << j.dump() << '\n';
    }
  }

  if (format == "machine") {
    nlohmann::ordered_json j;
    j["mode"] = ScoreModeName(report.mode);
    j["wer_percent"] = report.wer_percent;
    j["cer_percent"] = report.cer_percent;
    j["word_totals"] = {{"sub", report.word_totals.substitutions},
                        {"del", report.word_totals.deletions},
                        {"ins", report.word_totals.insertions},
                        {"ref_len", report.word_totals.ref_len}};
    j["char_totals"] = {{"sub", report.char_totals.substitutions},
                        {"del", report.char_totals.deletions},
                        {"ins", report.char_totals.insertions},
                        {"ref_len", report.char_totals.ref_len}};
    nlohmann::ordered_json worst = nlohmann::ordered_json::array();
    for (const SampleScore& w : report.worst) {
      worst.push_back({{"id", w.id}, {"wer", RoundPercent(w.wer_percent)}});
    }
    j["worst"] = worst;
    std::cout << j.dump(2) << '\n';
  } else {
    std::printf("mode: %s\n", ScoreModeName(report.mode));
    std::printf("samples: %zu\n", report.per_sample.size());
    std::printf("WER: %.2f%%  (S=%llu D=%llu I=%llu N=%llu)\n",
                report.wer_percent,
                static_cast<unsigned long long>(report.word_totals.substitutions),
                static_cast<unsigned long long>(report.word_totals.deletions),
                static_cast<unsigned long long>(report.word_totals.insertions),
                static_cast<unsigned long long>(report.word_totals.ref_len));
    std::printf("CER: %.2f%%  (S=%llu D=%llu I=%llu N=%llu)\n",
                report.cer_percent,
                static_cast<unsigned long long>(report.char_totals.substitutions),
                static_cast<unsigned long long>(report.char_totals.deletions),
                static_cast<unsigned long long>(report.char_totals.insertions),
                static_cast<unsigned long long>(report.char_totals.ref_len));
    if (!report.worst.empty()) {
      std::printf("worst samples:\n");
      for (const SampleScore& w : report.worst) {
        std::printf("  %8.2f  %s\n", w.wer_percent, w.id.c_str());
      }
    }
  }
  return kExitOk;
}

int RunSegmentVtt(const std::string& vtt_dir, const std::string& out_path,
                  double max_dur, double max_gap, bool strip_enum) {
  if (!fs::is_directory(vtt_dir)) {
    std::cerr << "not a directory: " << vtt_dir << '\n';
    return kExitDataError;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(vtt_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".vtt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open output manifest: " << out_path << '\n';
    return kExitDataError;
  }
  PackOptions pack;
  pack.max_duration = max_dur;
  if (max_gap > 0) pack.max_gap = max_gap;
  size_t total = 0;
  for (const fs::path& file : files) {
    std::ifstream in(file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::vector<Cue> cues;
    try {
      cues = ParseVtt(buffer.str());
    } catch (const VttParseError& e) {
      std::cerr << file.string() << ": " << e.what() << '\n';
      return kExitDataError;
    }
    const std::string source_id =
        fs::relative(file, vtt_dir).replace_extension("").string();
    std::vector<Sample> samples =
        SegmentsToSamples(PackCues(std::move(cues), pack), source_id);
    if (strip_enum) {
      for (Sample& s : samples) s.text = StripEnumeration(s.text);
    }
    for (const Sample& s : samples) {
      if (s.text.empty()) continue;
      out << SerializeSample(s) << '\n';
      ++total;
    }
  }
  std::cerr << "files: " << files.size() << ", segments: " << total << '\n';
  return kExitOk;
}

int RunDedup(const std::string& target_path,
             const std::vector<std::string>& reference_paths,
             const std::string& out_path, const std::string& removed_path,
             const std::string& letter_norm) {
  const LetterNormRules rules = ResolveRules(letter_norm);
  std::unordered_set<std::string> keys;
  for (const std::string& ref_path : reference_paths) {
    for (const Sample& s : ReadManifestFile(ref_path)) {
      std::string key = DedupKey(s.text, rules);
      if (!key.empty()) keys.insert(std::move(key));
    }
  }
  const std::vector<Sample> target = ReadManifestFile(target_path);
  const OverlapResult result = RemoveOverlap(target, keys, rules);
  WriteManifestFile(result.kept, out_path);
  if (!removed_path.empty()) {
    WriteManifestFile(result.removed, removed_path);
  }
  std::cerr << "target: " << target.size() << ", kept: " << result.kept.size()
            << ", removed: " << result.removed.size() << '\n';
  return kExitOk;
}

int RunStats(const std::string& in_path, const std::string& format,
             const std::string& alphabet_preset) {
  const AlphabetSpec* spec = AlphabetSpec::FromPresetName(alphabet_preset);
  if (!spec) {
    throw ConfigError("unknown alphabet preset '" + alphabet_preset + "'");
  }
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "cannot open manifest: " << in_path << '\n';
    return kExitDataError;
  }
  const StatsReport report = ComputeStats(in, *spec);
  if (format == "machine") {
    std::cout << StatsToJson(report).dump(2) << '\n';
  } else {
    std::cout << StatsToTable(report);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arabic speech-corpus engineering toolkit"};
  app.require_subcommand(1);

  // process
  std::string config_path, in_path, out_path, audit_path;
  int workers_override = 0;
  auto* process = app.add_subcommand("process", "Run a preprocessing pipeline");
  process->add_option("--config", config_path, "Pipeline config (JSON)")
      ->required();
  process->add_option("--in", in_path, "Input manifest")->required();
  process->add_option("--out", out_path, "Output manifest")->required();
  process->add_option("--audit", audit_path, "Audit manifest for drops");
  process->add_option("--workers", workers_override, "Override worker count");

  // score
  std::string manifest_path, mode_name = "plain", letter_norm = "none";
  std::string per_sample_path, score_format = "table";
  bool split_punct = false, cer_include_spaces = false;
  auto* score = app.add_subcommand("score", "Compute WER/CER for a manifest");
  score->add_option("--manifest", manifest_path, "Manifest with text + pred_text")
      ->required();
  score->add_option("--mode", mode_name, "plain|pc|pcd");
  score->add_option("--letter-norm", letter_norm,
                    "none|masc_eval|mediaspeech_eval");
  score->add_flag("--split-punct", split_punct,
                  "Score punctuation marks as separate tokens");
  score->add_flag("--cer-include-spaces", cer_include_spaces,
                  "Include spaces in the CER character sequence");
  score->add_option("--per-sample", per_sample_path,
                    "Write per-sample counts (JSON lines)");
  score->add_option("--format", score_format, "table|machine");

  // segment-vtt
  std::string vtt_dir, seg_out;
  double max_dur = 20.0, max_gap = 0;
  bool keep_enum = false;
  auto* segment =
      app.add_subcommand("segment-vtt", "Pack subtitle cues into samples");
  segment->add_option("--vtt-dir", vtt_dir, "Directory of .vtt files")
      ->required();
  segment->add_option("--out", seg_out, "Output manifest")->required();
  segment->add_option("--max-dur", max_dur, "Maximum segment duration (s)");
  segment->add_option("--max-gap", max_gap,
                      "Maximum intra-segment gap (s, 0 = unlimited)");
  segment->add_flag("--keep-enumeration", keep_enum,
                    "Keep leading list markers in segment text");

  // dedup
  std::string dd_target, dd_out, dd_removed, dd_rules = "none";
  std::vector<std::string> dd_refs;
  auto* dedup =
      app.add_subcommand("dedup", "Remove transcript overlap between splits");
  dedup->add_option("--target", dd_target, "Manifest to filter")->required();
  dedup->add_option("--reference", dd_refs, "Reference manifest(s)")
      ->required();
  dedup->add_option("--out", dd_out, "Filtered target manifest")->required();
  dedup->add_option("--removed", dd_removed, "Removed-lines manifest");
  dedup->add_option("--letter-norm", dd_rules,
                    "none|masc_eval|mediaspeech_eval");

  // stats
  std::string stats_in, stats_format = "table", stats_alphabet = "ca_pcd";
  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("--in", stats_in, "Input manifest")->required();
  stats->add_option("--format", stats_format, "table|machine");
  stats->add_option("--alphabet", stats_alphabet,
                    "Alphabet preset for out-of-alphabet counting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (process->parsed()) {
      return RunProcess(config_path, in_path, out_path, audit_path,
                        workers_override);
    }
    if (score->parsed()) {
      return RunScore(manifest_path, mode_name, letter_norm, split_punct,
                      cer_include_spaces, per_sample_path, score_format);
    }
    if (segment->parsed()) {
      return RunSegmentVtt(vtt_dir, seg_out, max_dur, max_gap, !keep_enum);
    }
    if (dedup->parsed()) {
      return RunDedup(dd_target, dd_refs, dd_out, dd_removed, dd_rules);
    }
    if (stats->parsed()) {
      return RunStats(stats_in, stats_format, stats_alphabet);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}
