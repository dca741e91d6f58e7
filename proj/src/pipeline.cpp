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

#include "arcorpus/pipeline.hpp"

#include <chrono>
#include <condition_variable>
#include <deque>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "arcorpus/filter.hpp"
#include "arcorpus/manifest.hpp"
#include "arcorpus/segment_vtt.hpp"
#include "arcorpus/unicode.hpp"

namespace arcorpus {

namespace {

using nlohmann::json;

struct Counters {
  std::vector<size_t> step_drops;
  size_t hyp_missing = 0;

  void MergeFrom(const Counters& o) {
    if (step_drops.size() < o.step_drops.size()) {
      step_drops.resize(o.step_drops.size());
    }
    for (size_t i = 0; i < o.step_drops.size(); ++i) {
      step_drops[i] += o.step_drops[i];
    }
    hyp_missing += o.hyp_missing;
  }
};

// Transforms mutate the sample and return Keep; filters leave it alone and
// may return a drop.
using StepFn = std::function<DropDecision(Sample&, Counters&)>;

struct CompiledStep {
  std::string name;
  StepFn fn;
};

void CheckParams(const StepConfig& step,
                 std::initializer_list<const char*> allowed) {
  if (!step.params.is_object()) {
    throw ConfigError("step '" + step.name + "': params must be an object");
  }
  for (auto it = step.params.begin(); it != step.params.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) {
      if (it.key() == a) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw ConfigError("step '" + step.name + "': unknown parameter '" +
                        it.key() + "'");
    }
  }
}

double NumberParam(const StepConfig& step, const char* key, double fallback) {
  auto it = step.params.find(key);
  if (it == step.params.end()) return fallback;
  if (!it->is_number()) {
    throw ConfigError("step '" + step.name + "': parameter '" + key +
                      "' must be a number");
  }
  return it->get<double>();
}

bool BoolParam(const StepConfig& step, const char* key, bool fallback) {
  auto it = step.params.find(key);
  if (it == step.params.end()) return fallback;
  if (!it->is_boolean()) {
    throw ConfigError("step '" + step.name + "': parameter '" + key +
                      "' must be a boolean");
  }
  return it->get<bool>();
}

char32_t SingleScalar(const StepConfig& step, const std::string& s) {
  const std::u32string scalars = Utf8Decode(s);
  if (scalars.size() != 1) {
    throw ConfigError("step '" + step.name + "': '" + s +
                      "' must be a single character");
  }
  return scalars[0];
}

NormalizeConfig NormalizeConfigFromParams(const StepConfig& step) {
  NormalizeConfig cfg;
  if (auto it = step.params.find("rare_punct_removals");
      it != step.params.end()) {
    if (!it->is_array()) {
      throw ConfigError("step '" + step.name +
                        "': rare_punct_removals must be an array");
    }
    cfg.rare_punct_removals.clear();
    for (const auto& v : *it) {
      cfg.rare_punct_removals.insert(
          SingleScalar(step, v.get<std::string>()));
    }
  }
  if (auto it = step.params.find("punct_map"); it != step.params.end()) {
    if (!it->is_object()) {
      throw ConfigError("step '" + step.name +
                        "': punct_map must be an object");
    }
    cfg.punct_map.clear();
    for (auto kv = it->begin(); kv != it->end(); ++kv) {
      cfg.punct_map[SingleScalar(step, kv.key())] =
          SingleScalar(step, kv.value().get<std::string>());
    }
  }
  cfg.collapse_repeats = BoolParam(step, "collapse_repeats", true);
  if (auto it = step.params.find("digit_policy"); it != step.params.end()) {
    const std::string policy = it->get<std::string>();
    if (policy == "convert_only") {
      cfg.digit_policy = DigitPolicy::kConvertOnly;
    } else if (policy == "convert_then_drop") {
      cfg.digit_policy = DigitPolicy::kConvertThenDrop;
    } else {
      throw ConfigError("step '" + step.name + "': unknown digit_policy '" +
                        policy + "'");
    }
  }
  cfg.Validate();
  return cfg;
}

LetterNormRules RulesFromParams(const StepConfig& step) {
  if (auto it = step.params.find("preset"); it != step.params.end()) {
    auto rules = LetterNormRules::FromPresetName(it->get<std::string>());
    if (!rules) {
      throw ConfigError("step '" + step.name +
                        "': unknown letter-norm preset '" +
                        it->get<std::string>() + "'");
    }
    return *rules;
  }
  LetterNormRules rules;
  rules.fold_alif = BoolParam(step, "fold_alif", false);
  rules.fold_ta_marbuta = BoolParam(step, "fold_ta_marbuta", false);
  rules.fold_alif_maksura = BoolParam(step, "fold_alif_maksura", false);
  return rules;
}

FilterConfig FilterConfigFromParams(const StepConfig& step) {
  FilterConfig cfg;
  cfg.min_duration = NumberParam(step, "min_duration", cfg.min_duration);
  cfg.max_duration = NumberParam(step, "max_duration", cfg.max_duration);
  cfg.min_word_rate = NumberParam(step, "min_word_rate", cfg.min_word_rate);
  cfg.max_word_rate = NumberParam(step, "max_word_rate", cfg.max_word_rate);
  cfg.min_char_rate = NumberParam(step, "min_char_rate", cfg.min_char_rate);
  cfg.max_char_rate = NumberParam(step, "max_char_rate", cfg.max_char_rate);
  cfg.max_wer = NumberParam(step, "max_wer", cfg.max_wer);
  cfg.max_cer = NumberParam(step, "max_cer", cfg.max_cer);
  if (cfg.min_duration >= cfg.max_duration ||
      cfg.min_word_rate >= cfg.max_word_rate ||
      cfg.min_char_rate >= cfg.max_char_rate) {
    throw ConfigError("step '" + step.name +
                      "': every min must be below its max");
  }
  if (cfg.min_duration < 0 || cfg.min_word_rate < 0 || cfg.min_char_rate < 0 ||
      cfg.max_wer < 0 || cfg.max_cer < 0) {
    throw ConfigError("step '" + step.name + "': thresholds must be >= 0");
  }
  return cfg;
}

DropDecision DigitDrop(const Sample& s) {
  const std::u32string scalars = Utf8Decode(s.text);
  for (size_t i = 0; i < scalars.size(); ++i) {
    if (IsAnyDigit(scalars[i])) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "digit U+%04X at scalar offset %zu",
                    static_cast<unsigned>(scalars[i]), i);
      return DropDecision::Drop(DropReason::kOutOfAlphabet, buf);
    }
  }
  return DropDecision::Keep();
}

const AlphabetSpec& SpecForStep(const StepConfig& step,
                                const AlphabetSpec& global) {
  auto it = step.params.find("preset");
  if (it == step.params.end()) return global;
  const AlphabetSpec* spec = AlphabetSpec::FromPresetName(it->get<std::string>());
  if (!spec) {
    throw ConfigError("step '" + step.name + "': unknown alphabet preset '" +
                      it->get<std::string>() + "'");
  }
  return *spec;
}

CompiledStep CompileStep(const StepConfig& step, const AlphabetSpec& global) {
  CompiledStep out;
  out.name = step.name;
  if (step.name == "eastern_digits") {
    CheckParams(step, {});
    out.fn = [](Sample& s, Counters&) {
      s.text = ConvertEasternDigits(s.text);
      return DropDecision::Keep();
    };
  } else if (step.name == "nfkc") {
    CheckParams(step, {});
    out.fn = [](Sample& s, Counters&) {
      s.text = UnicodeNormalize(s.text);
      return DropDecision::Keep();
    };
  } else if (step.name == "kasheeda") {
    CheckParams(step, {});
    out.fn = [](Sample& s, Counters&) {
      s.text = RemoveKasheeda(s.text);
      return DropDecision::Keep();
    };
  } else if (step.name == "punct") {
    CheckParams(step,
                {"rare_punct_removals", "punct_map", "collapse_repeats"});
    const NormalizeConfig cfg = NormalizeConfigFromParams(step);
    out.fn = [cfg](Sample& s, Counters&) {
      s.text = NormalizePunctuation(s.text, cfg);
      return DropDecision::Keep();
    };
  } else if (step.name == "full") {
    CheckParams(step, {"rare_punct_removals", "punct_map", "collapse_repeats",
                       "digit_policy"});
    const NormalizeConfig cfg = NormalizeConfigFromParams(step);
    out.fn = [cfg](Sample& s, Counters&) {
      s.text = NormalizeText(s.text, cfg);
      if (cfg.digit_policy == DigitPolicy::kConvertThenDrop) {
        return DigitDrop(s);
      }
      return DropDecision::Keep();
    };
  } else if (step.name == "letter_norm") {
    CheckParams(step,
                {"preset", "fold_alif", "fold_ta_marbuta", "fold_alif_maksura"});
    const LetterNormRules rules = RulesFromParams(step);
    out.fn = [rules](Sample& s, Counters&) {
      s.text = LetterNormalize(s.text, rules);
      return DropDecision::Keep();
    };
  } else if (step.name == "strip_enumeration") {
    CheckParams(step, {});
    out.fn = [](Sample& s, Counters&) {
      s.text = StripEnumeration(s.text);
      return DropDecision::Keep();
    };
  } else if (step.name == "alphabet") {
    CheckParams(step, {"preset"});
    const AlphabetSpec& spec = SpecForStep(step, global);
    out.fn = [&spec](Sample& s, Counters&) {
      return FilterAlphabet(s, spec);
    };
  } else if (step.name == "duration") {
    CheckParams(step, {"min_duration", "max_duration"});
    const FilterConfig cfg = FilterConfigFromParams(step);
    out.fn = [cfg](Sample& s, Counters&) { return FilterDuration(s, cfg); };
  } else if (step.name == "rates") {
    CheckParams(step, {"min_word_rate", "max_word_rate", "min_char_rate",
                       "max_char_rate"});
    const FilterConfig cfg = FilterConfigFromParams(step);
    out.fn = [cfg](Sample& s, Counters&) { return FilterRates(s, cfg); };
  } else if (step.name == "hypothesis") {
    CheckParams(step, {"max_wer", "max_cer"});
    const FilterConfig cfg = FilterConfigFromParams(step);
    out.fn = [cfg](Sample& s, Counters& c) {
      if (!s.pred_text) {
        ++c.hyp_missing;
        return DropDecision::Keep();
      }
      return FilterByHypothesis(s, cfg);
    };
  } else {
    throw ConfigError("unknown processor '" + step.name + "'");
  }
  return out;
}

std::vector<CompiledStep> CompileSteps(const PipelineConfig& cfg,
                                       const AlphabetSpec& global) {
  std::vector<CompiledStep> steps;
  steps.reserve(cfg.steps.size());
  for (const StepConfig& step : cfg.steps) {
    steps.push_back(CompileStep(step, global));
  }
  return steps;
}

// Runs one manifest line through all steps; appends output or audit line.
struct LineOutcome {
  bool kept = false;
  double duration = 0;
};

LineOutcome ProcessLine(const std::string& line, size_t line_no,
                        const std::vector<CompiledStep>& steps, Counters& c,
                        std::string& out, std::string& audit) {
  Sample s = ParseManifestLine(line, line_no);
  if (c.step_drops.size() < steps.size()) c.step_drops.resize(steps.size());
  for (size_t i = 0; i < steps.size(); ++i) {
    const DropDecision decision = steps[i].fn(s, c);
    if (!decision.kept) {
      ++c.step_drops[i];
      audit += SerializeSample(
          s, {{"drop_reason", DropReasonName(*decision.reason)},
              {"drop_detail", decision.detail}});
      audit += '\n';
      return {false, s.duration};
    }
  }
  out += SerializeSample(s);
  out += '\n';
  return {true, s.duration};
}

struct Batch {
  size_t index = 0;
  size_t first_line = 0;
  std::vector<std::string> lines;
};

struct BatchResult {
  std::string out;
  std::string audit;
  Counters counters;
  size_t kept = 0;
  double kept_seconds = 0;
  std::exception_ptr error;
  size_t error_pos = 0;  // line offset of the error inside the batch
};

constexpr size_t kBatchLines = 256;

}  // namespace

PipelineConfig PipelineConfig::FromJson(const json& j) {
  if (!j.is_object()) throw ConfigError("pipeline config must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key != "workers" && key != "alphabet_preset" && key != "audit_path" &&
        key != "steps") {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  PipelineConfig cfg;
  if (auto it = j.find("workers"); it != j.end()) {
    if (!it->is_number_integer() || it->get<int>() < 1) {
      throw ConfigError("workers must be an integer >= 1");
    }
    cfg.workers = it->get<int>();
  }
  if (auto it = j.find("alphabet_preset"); it != j.end()) {
    cfg.alphabet_preset = it->get<std::string>();
  }
  if (auto it = j.find("audit_path"); it != j.end()) {
    cfg.audit_path = it->get<std::string>();
  }
  if (auto it = j.find("steps"); it != j.end()) {
    if (!it->is_array()) throw ConfigError("steps must be an array");
    for (const auto& sj : *it) {
      if (!sj.is_object() || !sj.contains("name")) {
        throw ConfigError("each step needs a 'name'");
      }
      StepConfig step;
      step.name = sj["name"].get<std::string>();
      if (sj.contains("params")) step.params = sj["params"];
      for (auto kt = sj.begin(); kt != sj.end(); ++kt) {
        if (kt.key() != "name" && kt.key() != "params") {
          throw ConfigError("step '" + step.name + "': unknown key '" +
                            kt.key() + "'");
        }
      }
      cfg.steps.push_back(std::move(step));
    }
  }
  const AlphabetSpec* spec = AlphabetSpec::FromPresetName(cfg.alphabet_preset);
  if (!spec) {
    throw ConfigError("unknown alphabet preset '" + cfg.alphabet_preset + "'");
  }
  CompileSteps(cfg, *spec);  // fail fast on step/param errors
  return cfg;
}

PipelineConfig PipelineConfig::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ConfigError("config is not valid JSON: " + path);
  return FromJson(j);
}

PipelineSummary RunPipeline(const PipelineConfig& cfg, std::istream& in,
                            std::ostream& out, std::ostream* audit) {
  const AlphabetSpec* spec = AlphabetSpec::FromPresetName(cfg.alphabet_preset);
  if (!spec) {
    throw ConfigError("unknown alphabet preset '" + cfg.alphabet_preset + "'");
  }
  const std::vector<CompiledStep> steps = CompileSteps(cfg, *spec);

  const auto t0 = std::chrono::steady_clock::now();
  PipelineSummary summary;
  Counters totals;
  totals.step_drops.resize(steps.size());

  if (cfg.workers <= 1) {
    std::string line;
    size_t line_no = 0;
    std::string out_buf, audit_buf;
    while (std::getline(in, line)) {
      ++line_no;
      out_buf.clear();
      audit_buf.clear();
      const LineOutcome r =
          ProcessLine(line, line_no, steps, totals, out_buf, audit_buf);
      out << out_buf;
      if (audit) *audit << audit_buf;
      ++summary.lines_in;
      if (r.kept) {
        ++summary.kept;
        summary.kept_hours += r.duration / 3600.0;
      } else {
        ++summary.dropped;
      }
    }
  } else {
    std::mutex mu;
    std::condition_variable cv_work, cv_result;
    std::deque<Batch> work;
    std::map<size_t, BatchResult> results;
    bool reading_done = false;
    const size_t max_queue = static_cast<size_t>(cfg.workers) * 4;
    const size_t max_inflight = max_queue + cfg.workers + 4;
    size_t next_to_write = 0;
    size_t produced = 0;

    auto worker = [&] {
      while (true) {
        Batch batch;
        {
          std::unique_lock<std::mutex> lock(mu);
          cv_work.wait(lock, [&] { return !work.empty() || reading_done; });
          if (work.empty()) return;
          batch = std::move(work.front());
          work.pop_front();
        }
        cv_work.notify_all();
        BatchResult result;
        for (size_t i = 0; i < batch.lines.size(); ++i) {
          try {
            const LineOutcome r =
                ProcessLine(batch.lines[i], batch.first_line + i, steps,
                            result.counters, result.out, result.audit);
            if (r.kept) {
              ++result.kept;
              result.kept_seconds += r.duration;
            }
          } catch (...) {
            result.error = std::current_exception();
            result.error_pos = i;
            break;
          }
        }
        {
          std::lock_guard<std::mutex> lock(mu);
          results.emplace(batch.index, std::move(result));
        }
        cv_result.notify_all();
      }
    };

    std::vector<std::thread> threads;
    threads.reserve(cfg.workers);
    for (int i = 0; i < cfg.workers; ++i) threads.emplace_back(worker);

    std::thread reader([&] {
      std::string line;
      size_t line_no = 0;
      Batch batch;
      batch.first_line = 1;
      auto push = [&](Batch&& b) {
        std::unique_lock<std::mutex> lock(mu);
        cv_work.wait(lock, [&] {
          return work.size() < max_queue &&
                 b.index < next_to_write + max_inflight;
        });
        work.push_back(std::move(b));
        ++produced;
        cv_work.notify_all();
      };
      while (std::getline(in, line)) {
        ++line_no;
        batch.lines.push_back(line);
        if (batch.lines.size() >= kBatchLines) {
          const size_t idx = batch.index;
          push(std::move(batch));
          batch = Batch{};
          batch.index = idx + 1;
          batch.first_line = line_no + 1;
        }
      }
      if (!batch.lines.empty()) push(std::move(batch));
      {
        std::lock_guard<std::mutex> lock(mu);
        reading_done = true;
      }
      cv_work.notify_all();
      cv_result.notify_all();
    });

    // Writer: consume results in batch order. On a data error, keep
    // draining so the reader and workers can finish, then rethrow.
    std::exception_ptr first_error;
    while (true) {
      BatchResult result;
      {
        std::unique_lock<std::mutex> lock(mu);
        cv_result.wait(lock, [&] {
          return results.count(next_to_write) ||
                 (reading_done && next_to_write >= produced);
        });
        auto it = results.find(next_to_write);
        if (it == results.end()) break;  // all batches drained
        result = std::move(it->second);
        results.erase(it);
        ++next_to_write;
      }
      cv_work.notify_all();
      if (first_error) continue;
      if (result.error) {
        first_error = result.error;
        continue;
      }
      out << result.out;
      if (audit) *audit << result.audit;
      totals.MergeFrom(result.counters);
      summary.kept += result.kept;
      summary.kept_hours += result.kept_seconds / 3600.0;
    }

    reader.join();
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);

    summary.lines_in = 0;  // recomputed below from counters + kept
  }

  if (cfg.workers > 1) {
    size_t dropped = 0;
    for (size_t d : totals.step_drops) dropped += d;
    summary.dropped = dropped;
    summary.lines_in = summary.kept + summary.dropped;
  }
  summary.hypothesis_missing = totals.hyp_missing;
  for (size_t i = 0; i < steps.size(); ++i) {
    summary.drops_per_step.emplace_back(steps[i].name, totals.step_drops[i]);
  }
  const auto t1 = std::chrono::steady_clock::now();
  summary.elapsed_seconds =
      std::chrono::duration<double>(t1 - t0).count();
  summary.lines_per_second =
      summary.elapsed_seconds > 0
          ? static_cast<double>(summary.lines_in) / summary.elapsed_seconds
          : 0;
  out.flush();
  if (audit) audit->flush();
  return summary;
}

std::string SummaryToString(const PipelineSummary& summary) {
  std::ostringstream os;
  os << "lines in:        " << summary.lines_in << '\n';
  os << "kept:            " << summary.kept << '\n';
  os << "dropped:         " << summary.dropped << '\n';
  os << "kept hours:      " << summary.kept_hours << '\n';
  for (const auto& [name, drops] : summary.drops_per_step) {
    os << "  drops by " << name << ": " << drops << '\n';
  }
  if (summary.hypothesis_missing > 0) {
    os << "samples without pred_text (kept): " << summary.hypothesis_missing
       << '\n';
  }
  os << "elapsed:         " << summary.elapsed_seconds << " s\n";
  os << "throughput:      " << summary.lines_per_second << " lines/s\n";
  return os.str();
}

}  // namespace arcorpus
