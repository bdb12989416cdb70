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

#include "lst20/segment.h"

#include <gtest/gtest.h>

#include <random>

#include "lst20/validate.h"
#include "oracles.h"

namespace lst20 {
namespace {

using testing::LoadFixture;

std::vector<ClauseLabel> LabelsOf(const Sentence& s) {
  std::vector<ClauseLabel> out;
  for (const Token& t : s.tokens) out.push_back(t.clause);
  return out;
}

// Non-space surfaces of each sentence, joined by spaces.
std::vector<std::string> Partition(const Document& doc) {
  std::vector<std::string> out;
  for (const Sentence& s : doc.sentences) {
    std::string line;
    for (const Token& t : s.tokens) {
      if (t.is_space) continue;
      if (!line.empty()) line += ' ';
      line += t.surface;
    }
    out.push_back(line);
  }
  return out;
}

std::vector<ClauseSpan> Detect(const std::string& fixture,
                               const SegmenterConfig& config = {},
                               const MarkerLexicon& lexicon = MarkerLexicon::Default()) {
  const Document doc = LoadFixture(fixture);
  return DetectParagraphClauses(ParagraphFromSentence(doc.sentences.at(0)), lexicon,
                                config);
}

TEST(LexiconTest, DefaultCategories) {
  const MarkerLexicon lex = MarkerLexicon::Default();
  EXPECT_TRUE(lex.IsClauseMarker("ว่า"));
  EXPECT_TRUE(lex.IsClauseMarker("อย่างไรก็ตาม"));
  EXPECT_TRUE(lex.IsClauseMarker("เช่น"));
  EXPECT_TRUE(lex.IsClauseMarker("นะ"));
  EXPECT_TRUE(lex.IsClauseMarker("ไหม"));
  EXPECT_FALSE(lex.IsClauseMarker("กล่าว"));  // reporting verbs are not markers
  EXPECT_EQ(lex.auxiliaries.size(), 25u);
}

TEST(LexiconTest, ConfigEntriesAreAdded) {
  const MarkerLexicon lex = LoadMarkerLexicon(
      "# extra particles\n[particles]\nจ้ะ\n\n[reporting_verbs]\nแถลง\n");
  EXPECT_TRUE(lex.particles.contains("จ้ะ"));
  EXPECT_TRUE(lex.particles.contains("นะ"));
  EXPECT_TRUE(lex.reporting_verbs.contains("แถลง"));
}

TEST(LexiconTest, ConfigErrorsCarryLine) {
  try {
    LoadMarkerLexicon("[particles]\nนะ\n[nonsense]\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(LoadMarkerLexicon("orphan\n"), ConfigError);
  EXPECT_THROW(LoadMarkerLexicon("[particles\n"), ConfigError);
}

TEST(ConfigTest, Validation) {
  SegmenterConfig config;
  EXPECT_NO_THROW(config.Validate());
  config.set_enabled(SegmentRule::kS1, false);
  EXPECT_THROW(config.Validate(), ConfigError);
  config = {};
  config.pair_rule_order = {SegmentRule::kS2, SegmentRule::kS2};
  EXPECT_THROW(config.Validate(), ConfigError);
  config.pair_rule_order = {SegmentRule::kS3};
  EXPECT_THROW(config.Validate(), ConfigError);
}

TEST(ClauseDetectionTest, ConnectorSampleReproducesGoldColumn) {
  const Document doc = LoadFixture("connectors.inline");
  const Sentence& gold = doc.sentences[0];
  const auto spans = Detect("connectors.inline");
  EXPECT_EQ(spans, (std::vector<ClauseSpan>{
                       {0, 6, true}, {7, 13, true}, {14, 25, true}, {25, 31, true}}));
  EXPECT_EQ(EmitClauseLabels(spans, gold.tokens.size()), LabelsOf(gold));
}

TEST(ClauseDetectionTest, WhiteSpaceRule) {
  const auto spans = Detect("space_rule.inline");
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0], (ClauseSpan{0, 6, true}));
  EXPECT_EQ(spans[1], (ClauseSpan{7, 14, true}));
}

TEST(ClauseDetectionTest, ConnectorWithoutSpace) {
  const Document doc = LoadFixture("connector_no_space.inline");
  const auto spans = Detect("connector_no_space.inline");
  EXPECT_EQ(EmitClauseLabels(spans, 9), LabelsOf(doc.sentences[0]));
}

TEST(ClauseDetectionTest, RulesCanBeDisabled) {
  SegmenterConfig config;
  config.set_enabled(SegmentRule::kR2, false);
  EXPECT_EQ(Detect("space_rule.inline", config).size(), 1u);
  config = {};
  config.set_enabled(SegmentRule::kR3, false);
  EXPECT_EQ(Detect("connector_no_space.inline", config).size(), 1u);
}

TEST(ClauseDetectionTest, NoMarkerNoSplit) {
  // Verbs on both sides of the space, but no clause marker next to it.
  MarkerLexicon empty;
  EXPECT_EQ(Detect("space_rule.inline", {}, empty).size(), 1u);
}

TEST(ClauseDetectionTest, EdgeCases) {
  const MarkerLexicon lex = MarkerLexicon::Default();
  EXPECT_TRUE(DetectParagraphClauses({}, lex, {}).empty());
  Paragraph spaces = {{"_", PosTag::kPU, true}, {"_", PosTag::kPU, true}};
  EXPECT_TRUE(DetectParagraphClauses(spaces, lex, {}).empty());
  Paragraph verbless = {{"บ้าน", PosTag::kNN, false}, {"_", PosTag::kPU, true},
                        {"สวน", PosTag::kNN, false}};
  EXPECT_EQ(DetectParagraphClauses(verbless, lex, {}),
            (std::vector<ClauseSpan>{{0, 3, false}}));
  Paragraph lone = {{"_", PosTag::kPU, true}, {"วิ่ง", PosTag::kVV, false}};
  EXPECT_EQ(DetectParagraphClauses(lone, lex, {}),
            (std::vector<ClauseSpan>{{1, 2, true}}));
  EXPECT_EQ(EmitClauseLabels({{1, 2, true}}, 2),
            (std::vector<ClauseLabel>{ClauseLabel::kO, ClauseLabel::kB}));
}

TEST(ClauseSpansFromLabelsTest, InvertsEmit) {
  const Document doc = LoadFixture("connectors.inline");
  const Paragraph p = ParagraphFromSentence(doc.sentences[0]);
  const auto spans = ClauseSpansFromLabels(p, LabelsOf(doc.sentences[0]));
  EXPECT_EQ(spans, Detect("connectors.inline"));
}

Document Aggregate(const std::string& fixture, const SegmenterConfig& config = {},
                   const MarkerLexicon& lexicon = MarkerLexicon::Default()) {
  return AggregateDocument(LoadFixture(fixture), lexicon, config);
}

TEST(AggregationTest, SubjectShiftPartition) {
  const Document out = Aggregate("subject_paragraph.inline");
  EXPECT_EQ(Partition(out), Partition(LoadFixture("subject_sentences.inline")));
  ASSERT_TRUE(out.paragraph_starts.has_value());
  EXPECT_EQ(*out.paragraph_starts, std::vector<std::size_t>{0});
}

TEST(AggregationTest, ListMarkerMerges) {
  EXPECT_EQ(Aggregate("list_marker.inline").sentences.size(), 1u);
  SegmenterConfig config;
  config.set_enabled(SegmentRule::kS6, false);
  config.subject_shift = SubjectShift::kAlwaysSplit;
  EXPECT_EQ(Aggregate("list_marker.inline", config).sentences.size(), 2u);
}

TEST(AggregationTest, FinalParticleSplits) {
  const Document out = Aggregate("final_particle.inline");
  ASSERT_EQ(out.sentences.size(), 2u);
  // The separating space stays with the first sentence.
  EXPECT_TRUE(out.sentences[0].tokens.back().is_space);
  EXPECT_EQ(out.sentences[1].tokens.front().surface, "จะ");
}

TEST(AggregationTest, DirectSpeechMerges) {
  std::vector<BoundaryDecision> decisions;
  const Document doc = LoadFixture("direct_speech.inline");
  ParagraphStream stream{{ParagraphFromSentence(doc.sentences[0])}};
  const auto lex = MarkerLexicon::Default();
  const auto clauses = DetectClauses(stream, lex, {});
  ASSERT_EQ(clauses[0].size(), 2u);
  const auto sentences = AggregateSentences(stream, clauses, lex, {}, &decisions);
  EXPECT_EQ(sentences.size(), 1u);
  ASSERT_EQ(decisions.size(), 1u);
  EXPECT_EQ(decisions[0].rule, SegmentRule::kS4);
  EXPECT_FALSE(decisions[0].split);
}

TEST(AggregationTest, CohesiveMarkerSplits) {
  Paragraph p = {{"เขา", PosTag::kPR, false},  {"ไป", PosTag::kVV, false},
                 {"_", PosTag::kPU, true},     {"อย่างไรก็ตาม", PosTag::kCC, false},
                 {"ฝน", PosTag::kNN, false},   {"ตก", PosTag::kVV, false}};
  ParagraphStream stream{{p}};
  const auto lex = MarkerLexicon::Default();
  std::vector<std::vector<ClauseSpan>> clauses = {{{0, 2, true}, {3, 6, true}}};
  std::vector<BoundaryDecision> decisions;
  EXPECT_EQ(AggregateSentences(stream, clauses, lex, {}, &decisions).size(), 2u);
  EXPECT_EQ(decisions[0].rule, SegmentRule::kS2);
}

TEST(AggregationTest, SubjectShiftPolicies) {
  SegmenterConfig config;
  config.subject_shift = SubjectShift::kNeverSplit;
  EXPECT_EQ(Aggregate("subject_paragraph.inline", config).sentences.size(), 1u);
  config.subject_shift = SubjectShift::kAlwaysSplit;
  EXPECT_EQ(Aggregate("subject_paragraph.inline", config).sentences.size(), 4u);
}

TEST(AggregationTest, PrecedenceIsConfigurable) {
  // A clause ending in a particle followed by a list marker: S6 vs S7.
  Paragraph p = {{"กิน", PosTag::kVV, false}, {"นะ", PosTag::kPA, false},
                 {"_", PosTag::kPU, true},    {"เช่น", PosTag::kCC, false},
                 {"ข้าว", PosTag::kNN, false}, {"มี", PosTag::kVV, false}};
  ParagraphStream stream{{p}};
  std::vector<std::vector<ClauseSpan>> clauses = {{{0, 2, true}, {3, 6, true}}};
  const auto lex = MarkerLexicon::Default();
  SegmenterConfig config;
  EXPECT_EQ(AggregateSentences(stream, clauses, lex, config).size(), 1u);
  config.pair_rule_order = {SegmentRule::kS7, SegmentRule::kS6};
  EXPECT_EQ(AggregateSentences(stream, clauses, lex, config).size(), 2u);
}

TEST(AggregationTest, NeverMergesAcrossParagraphs) {
  Document doc = LoadFixture("subject_sentences.inline");
  SegmenterConfig config;
  config.subject_shift = SubjectShift::kNeverSplit;
  const Document out = AggregateDocument(doc, MarkerLexicon::Default(), config);
  EXPECT_EQ(out.sentences.size(), 3u);
  EXPECT_EQ(*out.paragraph_starts, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(SegmentDocumentTest, FullPipeline) {
  const Document seg73 =
      SegmentDocument(LoadFixture("final_particle.inline"), MarkerLexicon::Default(), {});
  EXPECT_EQ(seg73.sentences.size(), 2u);
  const Document seg72 =
      SegmentDocument(LoadFixture("list_marker.inline"), MarkerLexicon::Default(), {});
  EXPECT_EQ(seg72.sentences.size(), 1u);
  const Document seg62 =
      SegmentDocument(LoadFixture("connectors.inline"), MarkerLexicon::Default(), {});
  EXPECT_EQ(LintDocument(seg62).errors(), 0u);
}

TEST(EmitSentenceMarkersTest, OneMarkerPerSentence) {
  const Document doc = LoadFixture("subject_sentences.inline");
  const std::string inl = EmitSentenceMarkers(doc.sentences, TextFormat::kInline);
  EXPECT_EQ(std::count(inl.begin(), inl.end(), '\n'), 3);
  const std::string col = EmitSentenceMarkers(doc.sentences, TextFormat::kColumnar);
  EXPECT_EQ(ReadColumnar(col, "x").document.sentences.size(), 3u);
}

// Properties over random paragraphs.
class SegmentPropertyTest : public ::testing::Test {
 protected:
  Paragraph RandomParagraph(std::mt19937& rng) {
    static const std::vector<std::pair<std::string, PosTag>> kVocab = {
        {"เขา", PosTag::kPR},    {"กิน", PosTag::kVV},   {"ข้าว", PosTag::kNN},
        {"ว่า", PosTag::kCC},    {"ที่", PosTag::kCC},    {"ซึ่ง", PosTag::kCC},
        {"นะ", PosTag::kPA},     {"เช่น", PosTag::kCC},   {"อย่างไรก็ตาม", PosTag::kCC},
        {"กล่าว", PosTag::kVV},  {"\"", PosTag::kPU},    {"จะ", PosTag::kAX},
        {"ไม่", PosTag::kNG},    {"มาก", PosTag::kAV},   {"คน", PosTag::kCL}};
    std::uniform_int_distribution<std::size_t> len(0, 30);
    std::uniform_int_distribution<std::size_t> pick(0, kVocab.size());
    Paragraph p;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = pick(rng);
      if (k == kVocab.size()) {
        p.push_back({"_", PosTag::kPU, true});
      } else {
        p.push_back({kVocab[k].first, kVocab[k].second, false});
      }
    }
    return p;
  }
};

TEST_F(SegmentPropertyTest, ClausesCoverEveryWordAndEmitLegalLabels) {
  std::mt19937 rng(7);
  const auto lex = MarkerLexicon::Default();
  for (int iter = 0; iter < 2000; ++iter) {
    const Paragraph p = RandomParagraph(rng);
    const auto spans = DetectParagraphClauses(p, lex, {});
    std::vector<int> cover(p.size(), 0);
    std::size_t prev_end = 0;
    for (const ClauseSpan& s : spans) {
      ASSERT_LT(s.start, s.end);
      ASSERT_GE(s.start, prev_end);
      ASSERT_FALSE(p[s.start].is_space);
      ASSERT_FALSE(p[s.end - 1].is_space);
      for (std::size_t t = s.start; t < s.end; ++t) ++cover[t];
      prev_end = s.end;
    }
    for (std::size_t t = 0; t < p.size(); ++t) {
      if (!p[t].is_space) ASSERT_EQ(cover[t], 1) << "iteration " << iter;
    }
    // Emitted labels form a legal clause sequence.
    Sentence s;
    const auto labels = EmitClauseLabels(spans, p.size());
    for (std::size_t t = 0; t < p.size(); ++t) {
      Token tok;
      tok.surface = p[t].surface;
      tok.pos = p[t].pos;
      tok.is_space = p[t].is_space;
      tok.clause = labels[t];
      s.tokens.push_back(tok);
    }
    for (const LintIssue& issue : ValidateClauseSequence(s)) {
      ASSERT_EQ(issue.severity, Severity::kWarning) << issue.code;
    }
    // Deterministic.
    ASSERT_EQ(spans, DetectParagraphClauses(p, lex, {}));
  }
}

// Adding cohesive markers to the lexicon never removes a sentence boundary.
TEST_F(SegmentPropertyTest, CohesiveMarkersAreMonotone) {
  std::mt19937 rng(11);
  const MarkerLexicon base = MarkerLexicon::Default();
  MarkerLexicon more = base;
  more.cohesive_markers.insert({"เขา", "จะ", "ไม่"});
  for (int iter = 0; iter < 1000; ++iter) {
    ParagraphStream stream{{RandomParagraph(rng), RandomParagraph(rng)}};
    const auto clauses = DetectClauses(stream, base, {});
    auto boundaries = [&](const MarkerLexicon& lex) {
      std::set<std::size_t> out;
      for (const SentenceSpan& s : AggregateSentences(stream, clauses, lex, {})) {
        out.insert(s.first_clause);
      }
      return out;
    };
    const auto before = boundaries(base);
    const auto after = boundaries(more);
    for (std::size_t b : before) ASSERT_TRUE(after.contains(b)) << "iteration " << iter;
  }
}

TEST_F(SegmentPropertyTest, SentencesPartitionClauses) {
  std::mt19937 rng(5);
  const auto lex = MarkerLexicon::Default();
  for (int iter = 0; iter < 1000; ++iter) {
    ParagraphStream stream{{RandomParagraph(rng), RandomParagraph(rng), RandomParagraph(rng)}};
    const auto clauses = DetectClauses(stream, lex, {});
    std::size_t total = 0;
    for (const auto& c : clauses) total += c.size();
    std::size_t next = 0;
    for (const SentenceSpan& s : AggregateSentences(stream, clauses, lex, {})) {
      ASSERT_EQ(s.first_clause, next);
      ASSERT_LT(s.first_clause, s.end_clause);
      next = s.end_clause;
    }
    ASSERT_EQ(next, total);
  }
}

}  // namespace
}  // namespace lst20
