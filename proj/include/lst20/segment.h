// Copyright 2026 The lst20kit Authors.
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

// Rule-based clause boundary detection and sentence aggregation over
// POS-tagged token streams.
//
// Clause rules, applied left to right within a paragraph:
//   R1  a paragraph boundary ends a clause;
//   R2  a white-space run splits when the text since the last boundary and
//       the chunk after the run both contain a VV token, and a clause marker
//       sits immediately before or after the run;
//   R3  a subordinate connector tagged CC opens a new clause, unless white
//       space follows it (then it closes the current clause and R2 decides).
// Chunks without a VV token are merged into the next clause, or into the
// previous one at the end of a paragraph.
//
// Sentence rules, applied to each adjacent clause pair:
//   S1  paragraph boundary: always split;
//   S6  next clause starts with a list marker: merge;
//   S4  clause ends in a reporting verb (+ connector), next opens a quote:
//       merge;
//   S5  clause ends in a reporting verb + connector: merge;
//   S2  next clause starts with a cohesive marker: split;
//   S7  clause ends with a particle (tagged PA): split;
//   S3  otherwise decided by SubjectShift.
// The order of S2/S4-S7 is configurable; S1 comes first and S3 last.

#ifndef LST20_SEGMENT_H_
#define LST20_SEGMENT_H_

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lst20/format.h"

namespace lst20 {

class ConfigError : public Error {
 public:
  ConfigError(std::size_t line, const std::string& message);
  // 1-based; 0 when not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct MarkerLexicon {
  std::set<std::string> subordinate_connectors;
  std::set<std::string> cohesive_markers;
  std::set<std::string> list_markers;
  std::set<std::string> particles;
  std::set<std::string> question_adverbs;
  std::set<std::string> reporting_verbs;
  std::set<std::string> auxiliaries;

  // Seeded only with items attested in the annotation guideline.
  static MarkerLexicon Default();

  // Any of the five clause-marker categories.
  bool IsClauseMarker(std::string_view surface) const;

  friend bool operator==(const MarkerLexicon&, const MarkerLexicon&) = default;
};

// Config text format (UTF-8):
//
//   # comment
//   [subordinate_connectors]
//   ซึ่ง
//   [particles]
//   จ้ะ
//
// Section names are the MarkerLexicon field names. Entries are added to the
// default lexicon. Throws ConfigError on malformed lines.
MarkerLexicon LoadMarkerLexicon(std::string_view config_text);
MarkerLexicon LoadMarkerLexicon(std::string_view config_text,
                                MarkerLexicon base);

enum class SegmentRule { kR1, kR2, kR3, kS1, kS2, kS3, kS4, kS5, kS6, kS7 };
inline constexpr std::size_t kSegmentRuleCount = 10;
std::string_view ToString(SegmentRule rule);

enum class SubjectShift { kAlwaysSplit, kNeverSplit, kSurfaceHeuristic };

struct SegmenterConfig {
  std::array<bool, kSegmentRuleCount> enabled_rules = {
      true, true, true, true, true, true, true, true, true, true};
  SubjectShift subject_shift = SubjectShift::kSurfaceHeuristic;
  // Precedence of the pair rules; must be a permutation of a subset of
  // {S2, S4, S5, S6, S7}.
  std::vector<SegmentRule> pair_rule_order = {
      SegmentRule::kS6, SegmentRule::kS4, SegmentRule::kS5, SegmentRule::kS2,
      SegmentRule::kS7};

  bool enabled(SegmentRule rule) const {
    return enabled_rules[static_cast<std::size_t>(rule)];
  }
  void set_enabled(SegmentRule rule, bool on) {
    enabled_rules[static_cast<std::size_t>(rule)] = on;
  }
  // Throws ConfigError unless R1 and S1 are on and the order is well formed.
  void Validate() const;
};

struct ParagraphToken {
  std::string surface;
  PosTag pos = PosTag::kXX;
  bool is_space = false;
};
using Paragraph = std::vector<ParagraphToken>;

struct ParagraphStream {
  std::vector<Paragraph> paragraphs;
};

Paragraph ParagraphFromSentence(const Sentence& sentence);

// [start, end) over paragraph token indices; both ends are non-space tokens.
struct ClauseSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  bool has_verb = false;

  friend bool operator==(const ClauseSpan&, const ClauseSpan&) = default;
};

// [first_clause, end_clause) over the paragraph-major clause list.
struct SentenceSpan {
  std::size_t paragraph = 0;
  std::size_t first_clause = 0;
  std::size_t end_clause = 0;

  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

// Why a clause pair was joined or separated.
struct BoundaryDecision {
  std::size_t paragraph = 0;
  std::size_t left_clause = 0;  // paragraph-major index of the left clause
  bool split = false;
  SegmentRule rule = SegmentRule::kS3;
};

std::vector<ClauseSpan> DetectParagraphClauses(const Paragraph& paragraph,
                                               const MarkerLexicon& lexicon,
                                               const SegmenterConfig& config);
std::vector<std::vector<ClauseSpan>> DetectClauses(
    const ParagraphStream& stream, const MarkerLexicon& lexicon,
    const SegmenterConfig& config);

// B_CLS on the first token of a span (also for single-token spans), E_CLS on
// the last, I_CLS inside, O outside every span.
std::vector<ClauseLabel> EmitClauseLabels(const std::vector<ClauseSpan>& spans,
                                          std::size_t token_count);

// Spans recovered from an existing clause column (B..E or lone B); for
// running the aggregator on gold clauses.
std::vector<ClauseSpan> ClauseSpansFromLabels(const Paragraph& paragraph,
                                              const std::vector<ClauseLabel>& labels);

std::vector<SentenceSpan> AggregateSentences(
    const ParagraphStream& stream,
    const std::vector<std::vector<ClauseSpan>>& clauses,
    const MarkerLexicon& lexicon, const SegmenterConfig& config,
    std::vector<BoundaryDecision>* decisions = nullptr);

// Inline: one `||` per sentence. Columnar: an empty line between sentences.
std::string EmitSentenceMarkers(const std::vector<Sentence>& sentences,
                                TextFormat format);

// Full pipeline. Each input sentence is treated as one paragraph; the result
// carries fresh clause labels, re-split sentences, and paragraph_starts.
// White space between two output sentences stays with the earlier one.
Document SegmentDocument(const Document& doc, const MarkerLexicon& lexicon,
                         const SegmenterConfig& config);

// Sentence aggregation only: clauses are read from the existing clause
// column (see ClauseSpansFromLabels) and labels are left unchanged.
Document AggregateDocument(const Document& doc, const MarkerLexicon& lexicon,
                           const SegmenterConfig& config);

}  // namespace lst20

#endif  // LST20_SEGMENT_H_
