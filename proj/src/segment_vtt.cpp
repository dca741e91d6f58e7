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

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "arcorpus/alphabet.hpp"
#include "arcorpus/unicode.hpp"

namespace arcorpus {

namespace {

std::vector<std::string> SplitLines(std::string_view content) {
  // Strip UTF-8 BOM.
  if (content.size() >= 3 && content.substr(0, 3) == "\xEF\xBB\xBF") {
    content.remove_prefix(3);
  }
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos <= content.size()) {
    size_t nl = content.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? content.substr(pos)
                                : content.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  // Drop a trailing empty line produced by a final newline.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

bool IsBlankLine(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

// `HH:MM:SS.mmm` with optional hours (`MM:SS.mmm`). Returns false on
// malformed input.
bool ParseTimestamp(std::string_view s, double* out) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t colon = s.find(':', start);
    if (colon == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      break;
    }
    parts.emplace_back(s.substr(start, colon - start));
    start = colon + 1;
  }
  if (parts.size() < 2 || parts.size() > 3) return false;
  auto all_digits = [](const std::string& p) {
    return !p.empty() &&
           std::all_of(p.begin(), p.end(),
                       [](unsigned char c) { return c >= '0' && c <= '9'; });
  };
  double hours = 0;
  size_t idx = 0;
  if (parts.size() == 3) {
    if (!all_digits(parts[0])) return false;
    hours = std::stod(parts[0]);
    idx = 1;
  }
  const std::string& mm = parts[idx];
  const std::string& ss_mmm = parts[idx + 1];
  if (mm.size() != 2 || !all_digits(mm)) return false;
  size_t dot = ss_mmm.find('.');
  if (dot == std::string::npos) return false;
  const std::string ss = ss_mmm.substr(0, dot);
  const std::string mmm = ss_mmm.substr(dot + 1);
  if (ss.size() != 2 || !all_digits(ss)) return false;
  if (mmm.size() != 3 || !all_digits(mmm)) return false;
  const double minutes = std::stod(mm);
  const double seconds = std::stod(ss);
  if (minutes >= 60 || seconds >= 60) return false;
  *out = hours * 3600 + minutes * 60 + seconds + std::stod(mmm) / 1000.0;
  return true;
}

std::string Trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string RemoveMarkupTags(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool in_tag = false;
  for (char c : s) {
    if (c == '<') {
      in_tag = true;
    } else if (c == '>') {
      in_tag = false;
    } else if (!in_tag) {
      out.push_back(c);
    }
  }
  return out;
}

// Parses `start --> end [settings]`; settings are ignored.
Cue ParseTimingLine(const std::string& line, size_t line_no) {
  const size_t arrow = line.find("-->");
  if (arrow == std::string::npos) {
    throw VttParseError("expected cue timing line", line_no);
  }
  const std::string lhs = Trim(line.substr(0, arrow));
  std::string rhs = Trim(line.substr(arrow + 3));
  // Cut cue settings after the end timestamp.
  if (size_t sp = rhs.find_first_of(" \t"); sp != std::string::npos) {
    rhs = rhs.substr(0, sp);
  }
  Cue cue;
  if (!ParseTimestamp(lhs, &cue.start) || !ParseTimestamp(rhs, &cue.end)) {
    throw VttParseError("malformed timestamp", line_no);
  }
  if (!(cue.start >= 0) || !(cue.start < cue.end)) {
    throw VttParseError("cue end must be after cue start", line_no);
  }
  return cue;
}

}  // namespace

std::vector<Cue> ParseVtt(std::string_view content) {
  const std::vector<std::string> lines = SplitLines(content);
  if (lines.empty() || lines[0].rfind("WEBVTT", 0) != 0) {
    throw VttParseError("missing WEBVTT header", 1);
  }
  std::vector<Cue> cues;
  size_t i = 1;
  const size_t n = lines.size();
  while (i < n) {
    if (IsBlankLine(lines[i])) {
      ++i;
      continue;
    }
    // NOTE / STYLE / REGION blocks are skipped wholesale.
    if (lines[i].rfind("NOTE", 0) == 0 || lines[i].rfind("STYLE", 0) == 0 ||
        lines[i].rfind("REGION", 0) == 0) {
      while (i < n && !IsBlankLine(lines[i])) ++i;
      continue;
    }
    size_t timing_line = i;
    if (lines[i].find("-->") == std::string::npos) {
      // Cue identifier line; the timing line must follow.
      if (i + 1 >= n || IsBlankLine(lines[i + 1])) {
        throw VttParseError("expected cue timing line", i + 1);
      }
      timing_line = i + 1;
    }
    Cue cue = ParseTimingLine(lines[timing_line], timing_line + 1);
    i = timing_line + 1;
    std::string text;
    while (i < n && !IsBlankLine(lines[i])) {
      const std::string payload = Trim(RemoveMarkupTags(lines[i]));
      if (!payload.empty()) {
        if (!text.empty()) text += ' ';
        text += payload;
      }
      ++i;
    }
    cue.text = std::move(text);
    cues.push_back(std::move(cue));
  }
  return cues;
}

std::vector<Segment> PackCues(std::vector<Cue> cues, const PackOptions& opts) {
  std::stable_sort(cues.begin(), cues.end(), [](const Cue& a, const Cue& b) {
    return a.start < b.start;
  });
  std::vector<Segment> segments;
  Segment cur;
  auto flush = [&] {
    if (cur.cue_count > 0 && !Trim(cur.text).empty()) {
      cur.text = Trim(cur.text);
      segments.push_back(cur);
    }
    cur = Segment{};
  };
  for (const Cue& cue : cues) {
    const bool fits = cur.cue_count > 0 &&
                      cue.end - cur.start <= opts.max_duration &&
                      cue.start - cur.end <= opts.max_gap;
    if (cur.cue_count > 0 && !fits) flush();
    if (cur.cue_count == 0) {
      cur.start = cue.start;
      cur.end = cue.end;
      cur.text = cue.text;
      cur.cue_count = 1;
    } else {
      cur.end = std::max(cur.end, cue.end);
      if (!cue.text.empty()) {
        if (!cur.text.empty()) cur.text += ' ';
        cur.text += cue.text;
      }
      ++cur.cue_count;
    }
  }
  flush();
  return segments;
}

std::string StripEnumeration(std::string_view text) {
  std::u32string scalars = Utf8Decode(text);
  while (true) {
    size_t i = 0;
    while (i < scalars.size() && IsAnyDigit(scalars[i])) ++i;
    if (i == 0) break;
    if (i >= scalars.size()) break;
    const char32_t mark = scalars[i];
    if (mark != U'.' && mark != U')' && mark != U'-' && mark != 0x060C) break;
    size_t j = i + 1;
    if (j < scalars.size() && !IsAsciiSpace(scalars[j])) break;
    while (j < scalars.size() && IsAsciiSpace(scalars[j])) ++j;
    scalars.erase(0, j);
  }
  return Utf8Encode(scalars);
}

std::vector<Sample> SegmentsToSamples(const std::vector<Segment>& segments,
                                      const std::string& source_id) {
  std::vector<Sample> samples;
  samples.reserve(segments.size());
  auto round3 = [](double v) { return std::round(v * 1000.0) / 1000.0; };
  for (const Segment& seg : segments) {
    Sample s;
    s.audio_filepath = source_id;
    s.offset = round3(seg.start);
    s.duration = round3(seg.end - seg.start);
    s.text = seg.text;
    samples.push_back(std::move(s));
  }
  return samples;
}

}  // namespace arcorpus
