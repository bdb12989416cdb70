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

#include "lst20/format.h"

#include <gtest/gtest.h>

#include "oracles.h"

namespace lst20 {
namespace {

using testing::LoadFixture;
using testing::ReadFixture;

TEST(ColumnarTest, ReadsWindowFixture) {
  ColumnarResult r = ReadColumnar(ReadFixture("news_window.txt"), "news_window");
  ASSERT_TRUE(r.errors.empty());
  const auto& s = r.document.sentences;
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].tokens.size(), 9u);
  EXPECT_EQ(s[1].tokens.size(), 8u);
  EXPECT_EQ(s[2].tokens.size(), 10u);
  EXPECT_EQ(s[1].tokens[2].surface, "กกด.");
  EXPECT_EQ(ToString(s[1].tokens[2].ne), "B_ORG");
  EXPECT_TRUE(s[2].tokens[2].is_space);
  EXPECT_EQ(s[2].tokens[2].pos, PosTag::kPU);
}

TEST(ColumnarTest, WriteIsByteStable) {
  const std::string text = ReadFixture("news_window.txt");
  ColumnarResult r = ReadColumnar(text, "news_window", ParseMode::kStrict);
  EXPECT_EQ(WriteColumnar(r.document), text);
}

TEST(ColumnarTest, EmptyInputIsEmptyDocument) {
  ColumnarResult r = ReadColumnar("", "d");
  EXPECT_TRUE(r.document.sentences.empty());
  EXPECT_TRUE(r.errors.empty());
  EXPECT_EQ(WriteColumnar(r.document), "");
}

TEST(ColumnarTest, RepeatedBlankLinesCollapse) {
  ColumnarResult r = ReadColumnar("a\tNN\tO\tO\n\n\n\nb\tVV\tO\tO\n", "d");
  EXPECT_EQ(r.document.sentences.size(), 2u);
}

TEST(ColumnarTest, PermissiveCollectsLocatedErrors) {
  const std::string text =
      "a\tNN\tO\tO\n"
      "b\tQQ\tO\tO\n"
      "c\tNN\tB_FOO\tO\n"
      "d\tNN\tO\n"
      "e\tNN\tO\tX_CLS\n"
      "f\tNN\tO\tO\r\n"
      "\tNN\tO\tO\n";
  ColumnarResult r = ReadColumnar(text, "d");
  ASSERT_EQ(r.errors.size(), 6u);
  EXPECT_EQ(r.errors[0].code, "FORMAT_BAD_POS");
  EXPECT_EQ(r.errors[0].line, 2u);
  EXPECT_EQ(r.errors[1].code, "FORMAT_BAD_NE");
  EXPECT_EQ(r.errors[2].code, "FORMAT_FIELD_COUNT");
  EXPECT_EQ(r.errors[3].code, "FORMAT_BAD_CLS");
  EXPECT_EQ(r.errors[4].code, "FORMAT_LINE_ENDING");
  EXPECT_EQ(r.errors[5].code, "FORMAT_EMPTY_FIELD");
  ASSERT_EQ(r.document.sentences.size(), 1u);
  EXPECT_EQ(r.document.sentences[0].tokens.size(), 1u);
}

TEST(ColumnarTest, StrictThrowsAtFirstError) {
  try {
    ReadColumnar("a\tNN\tO\tO\nb\tNN\tO\tO\tO\n", "d", ParseMode::kStrict);
    FAIL();
  } catch (const FormatException& e) {
    EXPECT_EQ(e.error().code, "FORMAT_FIELD_COUNT");
    EXPECT_EQ(e.error().line, 2u);
  }
}

TEST(ColumnarTest, InvalidUtf8) {
  ColumnarResult r = ReadColumnar("\xff\tNN\tO\tO\n", "d");
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].code, "FORMAT_ENCODING");
}

TEST(ColumnarTest, WriterRejectsUnrepresentableTokens) {
  Document doc;
  doc.sentences.push_back({});
  EXPECT_THROW(WriteColumnar(doc), WriteError);
  Token underscore;
  underscore.surface = "_";
  underscore.pos = PosTag::kPU;
  doc.sentences[0].tokens = {underscore};
  EXPECT_THROW(WriteColumnar(doc), WriteError);
  Token tab;
  tab.surface = "a\tb";
  doc.sentences[0].tokens = {tab};
  EXPECT_THROW(WriteColumnar(doc), WriteError);
}

TEST(InlineTest, ParsesFourLayers) {
  InlineResult r = ReadInline(ReadFixture("connectors.inline"), ParseMode::kStrict);
  ASSERT_EQ(r.sentences.size(), 1u);
  const auto& t = r.sentences[0].tokens;
  ASSERT_EQ(t.size(), 31u);
  EXPECT_EQ(t[0].surface, "น.พ.");
  EXPECT_EQ(ToString(t[0].ne), "B_PER");
  EXPECT_EQ(t[0].clause, ClauseLabel::kB);
  EXPECT_TRUE(t[2].is_space);
  EXPECT_EQ(t[2].surface, kSpaceSurface);
  EXPECT_EQ(t[2].clause, ClauseLabel::kI);
  EXPECT_EQ(t[6].clause, ClauseLabel::kO);
}

TEST(InlineTest, ThreeLayersDefaultClauseToO) {
  InlineResult r = ReadInline(ReadFixture("three_layer.inline"), ParseMode::kStrict);
  ASSERT_EQ(r.sentences.size(), 1u);
  ASSERT_EQ(r.sentences[0].tokens.size(), 17u);
  for (const Token& t : r.sentences[0].tokens) EXPECT_EQ(t.clause, ClauseLabel::kO);
  EXPECT_EQ(r.sentences[0].tokens[16].surface, "ทันที");
}

TEST(InlineTest, SurfaceMayContainSlash) {
  InlineResult r = ReadInline("a/b/NN/O/O | x/NN/O/NN/O/O ||", ParseMode::kStrict);
  ASSERT_EQ(r.sentences[0].tokens.size(), 2u);
  EXPECT_EQ(r.sentences[0].tokens[0].surface, "a/b");
  EXPECT_EQ(r.sentences[0].tokens[1].surface, "x/NN/O");
}

TEST(InlineTest, TrailingMaterialIsLastSentence) {
  InlineResult r = ReadInline("a/NN || b/VV", ParseMode::kStrict);
  EXPECT_EQ(r.sentences.size(), 2u);
}

TEST(InlineTest, ArityMismatchIsAnError) {
  InlineResult r = ReadInline("a/NN/O/O | b/NN ||");
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].code, "FORMAT_ARITY");
  EXPECT_EQ(r.errors[0].token, 1u);
  EXPECT_THROW(ReadInline("a | b ||", ParseMode::kStrict), FormatException);
}

TEST(InlineTest, WriterLayers) {
  InlineResult r = ReadInline("กกด./NN/B_ORG/I_CLS | ␣/PU/O/O ||", ParseMode::kStrict);
  EXPECT_EQ(WriteInline(r.sentences, 2), "กกด./NN | ␣/PU ||\n");
  EXPECT_EQ(WriteInline(r.sentences, 3), "กกด./NN/B_ORG | ␣/PU/O ||\n");
  EXPECT_EQ(WriteInline(r.sentences, 4), "กกด./NN/B_ORG/I_CLS | ␣/PU/O/O ||\n");
  EXPECT_THROW(WriteInline(r.sentences, 5), Error);
}

TEST(InlineTest, WriterRejectsPipes) {
  Sentence s;
  Token t;
  t.surface = "a|b";
  s.tokens = {t};
  EXPECT_THROW(WriteInline({s}), WriteError);
  s.tokens[0].surface = "␣";
  EXPECT_THROW(WriteInline({s}), WriteError);
}

TEST(ConvertTest, ColumnarToInlineAndBackIsIdentity) {
  const std::string columnar = ReadFixture("news_window.txt");
  const std::string inl = Convert(TextFormat::kColumnar, TextFormat::kInline, columnar);
  EXPECT_EQ(Convert(TextFormat::kInline, TextFormat::kColumnar, inl), columnar);
}

TEST(ConvertTest, ConnectorSampleFreezesTokenCount) {
  const std::string inl = ReadFixture("connectors.inline");
  const std::string columnar = Convert(TextFormat::kInline, TextFormat::kColumnar, inl);
  EXPECT_EQ(std::count(columnar.begin(), columnar.end(), '\n'), 31);
  EXPECT_EQ(Convert(TextFormat::kColumnar, TextFormat::kInline, columnar), inl);
}

TEST(ConvertTest, ReaderErrorsPropagate) {
  EXPECT_THROW(Convert(TextFormat::kColumnar, TextFormat::kInline, "a\tXX1\tO\tO\n"),
               FormatException);
}

TEST(FixtureTest, AllInlineFixturesParseStrictly) {
  for (const char* name :
       {"three_layer.inline", "ne_organizations.inline", "ne_locations.inline", "ne_brand.inline", "ne_date.inline",
        "ne_measure.inline", "ne_number.inline", "ne_term.inline", "connectors.inline", "space_rule.inline",
        "connector_no_space.inline", "subject_paragraph.inline", "subject_sentences.inline", "direct_speech.inline", "list_marker.inline",
        "final_particle.inline"}) {
    EXPECT_NO_THROW(LoadFixture(name)) << name;
  }
}

}  // namespace
}  // namespace lst20
