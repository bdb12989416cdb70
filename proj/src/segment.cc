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

#include <algorithm>
#include <optional>
#include <utility>

#include "text_util.h"

namespace lst20 {

namespace {

using internal::Trim;

const std::array<std::string_view, 6> kOpeningQuotes = {"\"", "“", "'",
                                                        "‘", "«", "„"};

bool HasNonSpace(const Paragraph& p, std::size_t begin, std::size_t end) {
  for (std::size_t t = begin; t < end; ++t) {
    if (!p[t].is_space) return true;
  }
  return false;
}

bool HasVerb(const Paragraph& p, std::size_t begin, std::size_t end) {
  for (std::size_t t = begin; t < end; ++t) {
    if (!p[t].is_space && p[t].pos == PosTag::kVV) return true;
  }
  return false;
}

// Verb test for the chunk after a white-space run starting at `begin`: up to
// the next white space, carried across chunks made only of punctuation.
bool RightChunkHasVerb(const Paragraph& p, std::size_t begin) {
  std::size_t t = begin;
  while (t < p.size()) {
    bool only_punct = true;
    while (t < p.size() && !p[t].is_space) {
      if (p[t].pos == PosTag::kVV) return true;
      only_punct = only_punct && p[t].pos == PosTag::kPU;
      ++t;
    }
    if (!only_punct) return false;
    while (t < p.size() && p[t].is_space) ++t;
  }
  return false;
}

bool IsSubordinateConnector(const ParagraphToken& tok, const MarkerLexicon& lex) {
  return tok.pos == PosTag::kCC && lex.subordinate_connectors.contains(tok.surface);
}

// Non-space token positions of a clause.
std::vector<std::size_t> Words(const Paragraph& p, const ClauseSpan& c) {
  std::vector<std::size_t> out;
  for (std::size_t t = c.start; t < c.end; ++t) {
    if (!p[t].is_space) out.push_back(t);
  }
  return out;
}

bool IsSubjectTag(PosTag tag) {
  switch (tag) {
    case PosTag::kNN: case PosTag::kPR: case PosTag::kCL:
    case PosTag::kAJ: case PosTag::kNU: case PosTag::kFX:
      return true;
    default:
      return false;
  }
}

// The leading nominal run of a clause, or "" when the clause has no overt
// subject (zero anaphora, or a connector/auxiliary-initial clause).
std::string ExplicitSubject(const Paragraph& p, const ClauseSpan& c) {
  std::string out;
  for (std::size_t t : Words(p, c)) {
    if (!IsSubjectTag(p[t].pos)) break;
    if (!out.empty()) out += ' ';
    out += p[t].surface;
  }
  return out;
}

// Clause ends with a reporting verb, optionally followed by one subordinate
// connector. With `need_connector` the connector must be there and be a CC.
bool EndsWithReport(const Paragraph& p, const std::vector<std::size_t>& words,
                    const MarkerLexicon& lex, bool need_connector) {
  if (words.empty()) return false;
  const ParagraphToken& last = p[words.back()];
  const bool last_is_connector = lex.subordinate_connectors.contains(last.surface);
  if (last_is_connector && words.size() >= 2 &&
      lex.reporting_verbs.contains(p[words[words.size() - 2]].surface)) {
    return !need_connector || last.pos == PosTag::kCC;
  }
  return !need_connector && lex.reporting_verbs.contains(last.surface);
}

struct PairContext {
  const Paragraph& paragraph;
  std::vector<std::size_t> left;   // words of the left clause
  std::vector<std::size_t> right;  // words of the right clause
  const MarkerLexicon& lexicon;
};

// nullopt when the rule does not fire; otherwise true = split.
std::optional<bool> ApplyPairRule(SegmentRule rule, const PairContext& ctx) {
  const Paragraph& p = ctx.paragraph;
  const MarkerLexicon& lex = ctx.lexicon;
  if (ctx.left.empty() || ctx.right.empty()) return std::nullopt;
  const ParagraphToken& first_right = p[ctx.right.front()];
  const ParagraphToken& last_left = p[ctx.left.back()];
  switch (rule) {
    case SegmentRule::kS6:
      if (lex.list_markers.contains(first_right.surface)) return false;
      break;
    case SegmentRule::kS4:
      if (EndsWithReport(p, ctx.left, lex, /*need_connector=*/false) &&
          std::find(kOpeningQuotes.begin(), kOpeningQuotes.end(),
                    first_right.surface) != kOpeningQuotes.end()) {
        return false;
      }
      break;
    case SegmentRule::kS5:
      if (EndsWithReport(p, ctx.left, lex, /*need_connector=*/true)) return false;
      break;
    case SegmentRule::kS2:
      if (lex.cohesive_markers.contains(first_right.surface)) return true;
      break;
    case SegmentRule::kS7:
      if (last_left.pos == PosTag::kPA && lex.particles.contains(last_left.surface)) {
        return true;
      }
      break;
    default:
      break;
  }
  return std::nullopt;
}

const std::array<std::string_view, 7> kLexiconSections = {
    "subordinate_connectors", "cohesive_markers", "list_markers", "particles",
    "question_adverbs",       "reporting_verbs",  "auxiliaries"};

std::set<std::string>* Section(MarkerLexicon& lex, std::string_view name) {
  if (name == "subordinate_connectors") return &lex.subordinate_connectors;
  if (name == "cohesive_markers") return &lex.cohesive_markers;
  if (name == "list_markers") return &lex.list_markers;
  if (name == "particles") return &lex.particles;
  if (name == "question_adverbs") return &lex.question_adverbs;
  if (name == "reporting_verbs") return &lex.reporting_verbs;
  if (name == "auxiliaries") return &lex.auxiliaries;
  return nullptr;
}

}  // namespace

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                     : message),
      line_(line) {}

MarkerLexicon MarkerLexicon::Default() {
  MarkerLexicon lex;
  lex.subordinate_connectors = {"ซึ่ง", "ที่", "ถ้า", "ว่า", "ผู้"};
  lex.cohesive_markers = {"อย่างไรก็ตาม", "นอกจากนี้", "แต่ทว่า", "ในที่สุด"};
  lex.list_markers = {"เช่น", "ได้แก่", "ตามลำดับ"};
  lex.particles = {"ครับ", "ค่ะ", "นะ",     "เถิด",    "สินะ", "ซิ",
                   "มั้ง",  "ใช่ไหม", "ยัง", "หรือเปล่า", "วะ",  "เนี่ย"};
  lex.question_adverbs = {"อย่างไร", "ไหม", "ทำไม"};
  lex.reporting_verbs = {"กล่าว", "บอก", "ยืนยัน"};
  // Auxiliaries listed in the LST20 auxiliary table.
  lex.auxiliaries = {"กำลัง", "คง",   "ควร",  "ค่อย", "เคย",   "จะ",    "จง",
                     "จวน",  "ได้",   "ต้อง",  "น่า",   "ถูก",    "โดน",   "เพิ่ง",
                     "มัก",   "ยัก",   "ยัง",   "ยอม",  "แล้ว",   "ไว้",    "เสร็จ",
                     "ให้",   "ทำให้", "อยู่",  "อยู่แล้ว"};
  return lex;
}

bool MarkerLexicon::IsClauseMarker(std::string_view surface) const {
  const std::string s(surface);
  return subordinate_connectors.contains(s) || cohesive_markers.contains(s) ||
         list_markers.contains(s) || particles.contains(s) ||
         question_adverbs.contains(s);
}

MarkerLexicon LoadMarkerLexicon(std::string_view config_text) {
  return LoadMarkerLexicon(config_text, MarkerLexicon::Default());
}

MarkerLexicon LoadMarkerLexicon(std::string_view config_text, MarkerLexicon base) {
  std::set<std::string>* section = nullptr;
  const auto lines = internal::Split(config_text, '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    if (!internal::IsValidUtf8(line)) throw ConfigError(i + 1, "invalid UTF-8");
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(i + 1, "unclosed section header");
      std::string_view name = Trim(line.substr(1, line.size() - 2));
      section = Section(base, name);
      if (section == nullptr) {
        std::string known;
        for (std::string_view s : kLexiconSections) known += " " + std::string(s);
        throw ConfigError(i + 1, "unknown section '" + std::string(name) +
                                     "'; expected one of:" + known);
      }
      continue;
    }
    if (section == nullptr) {
      throw ConfigError(i + 1, "entry before any [section] header");
    }
    if (line.find_first_of("\t[]") != std::string_view::npos) {
      throw ConfigError(i + 1, "malformed entry '" + std::string(line) + "'");
    }
    section->insert(std::string(line));
  }
  return base;
}

std::string_view ToString(SegmentRule rule) {
  static constexpr std::array<std::string_view, kSegmentRuleCount> kNames = {
      "R1", "R2", "R3", "S1", "S2", "S3", "S4", "S5", "S6", "S7"};
  return kNames[static_cast<std::size_t>(rule)];
}

void SegmenterConfig::Validate() const {
  if (!enabled(SegmentRule::kR1) || !enabled(SegmentRule::kS1)) {
    throw ConfigError(0, "rules R1 and S1 (paragraph boundaries) cannot be disabled");
  }
  std::set<SegmentRule> seen;
  for (SegmentRule r : pair_rule_order) {
    const bool allowed = r == SegmentRule::kS2 || r == SegmentRule::kS4 ||
                         r == SegmentRule::kS5 || r == SegmentRule::kS6 ||
                         r == SegmentRule::kS7;
    if (!allowed) {
      throw ConfigError(0, "rule " + std::string(ToString(r)) +
                               " cannot appear in the pair-rule order");
    }
    if (!seen.insert(r).second) {
      throw ConfigError(0, "rule " + std::string(ToString(r)) + " listed twice");
    }
  }
}

Paragraph ParagraphFromSentence(const Sentence& sentence) {
  Paragraph p;
  p.reserve(sentence.tokens.size());
  for (const Token& t : sentence.tokens) p.push_back({t.surface, t.pos, t.is_space});
  return p;
}

std::vector<ClauseSpan> DetectParagraphClauses(const Paragraph& p,
                                               const MarkerLexicon& lex,
                                               const SegmenterConfig& config) {
  config.Validate();
  const std::size_t n = p.size();
  std::vector<std::pair<std::size_t, std::size_t>> chunks;
  std::size_t chunk_start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (p[i].is_space) {
      std::size_t j = i;
      while (j < n && p[j].is_space) ++j;
      if (config.enabled(SegmentRule::kR2) && i > 0 && j < n &&
          HasVerb(p, chunk_start, i) && RightChunkHasVerb(p, j) &&
          (lex.IsClauseMarker(p[i - 1].surface) ||
           lex.IsClauseMarker(p[j].surface))) {
        chunks.emplace_back(chunk_start, i);
        chunk_start = j;
      }
      i = j;
      continue;
    }
    if (config.enabled(SegmentRule::kR3) && IsSubordinateConnector(p[i], lex) &&
        i + 1 < n && !p[i + 1].is_space && HasNonSpace(p, chunk_start, i)) {
      chunks.emplace_back(chunk_start, i);
      chunk_start = i;
    }
    ++i;
  }
  if (chunk_start < n) chunks.emplace_back(chunk_start, n);

  // Trim white space off the chunk edges.
  std::vector<ClauseSpan> trimmed;
  for (auto [b, e] : chunks) {
    while (b < e && p[b].is_space) ++b;
    while (e > b && p[e - 1].is_space) --e;
    if (b < e) trimmed.push_back({b, e, HasVerb(p, b, e)});
  }

  // Verbless chunks join the next clause; trailing ones join the previous.
  std::vector<ClauseSpan> spans;
  std::optional<std::size_t> pending;
  for (ClauseSpan span : trimmed) {
    if (!span.has_verb) {
      if (!pending) pending = span.start;
      continue;
    }
    if (pending) {
      span.start = *pending;
      pending.reset();
    }
    spans.push_back(span);
  }
  if (pending) {
    if (!spans.empty()) {
      spans.back().end = trimmed.back().end;
    } else {
      spans.push_back({*pending, trimmed.back().end, false});
    }
  }
  return spans;
}

std::vector<std::vector<ClauseSpan>> DetectClauses(const ParagraphStream& stream,
                                                   const MarkerLexicon& lexicon,
                                                   const SegmenterConfig& config) {
  std::vector<std::vector<ClauseSpan>> out;
  out.reserve(stream.paragraphs.size());
  for (const Paragraph& p : stream.paragraphs) {
    out.push_back(DetectParagraphClauses(p, lexicon, config));
  }
  return out;
}

std::vector<ClauseLabel> EmitClauseLabels(const std::vector<ClauseSpan>& spans,
                                          std::size_t token_count) {
  std::vector<ClauseLabel> labels(token_count, ClauseLabel::kO);
  for (const ClauseSpan& span : spans) {
    for (std::size_t t = span.start; t < span.end && t < token_count; ++t) {
      labels[t] = ClauseLabel::kI;
    }
    if (span.end - 1 < token_count) labels[span.end - 1] = ClauseLabel::kE;
    if (span.start < token_count) labels[span.start] = ClauseLabel::kB;
  }
  return labels;
}

std::vector<ClauseSpan> ClauseSpansFromLabels(const Paragraph& p,
                                              const std::vector<ClauseLabel>& labels) {
  std::vector<ClauseSpan> spans;
  std::optional<std::size_t> open;
  std::size_t last_in = 0;
  auto close = [&](std::size_t end) {
    spans.push_back({*open, end, HasVerb(p, *open, end)});
    open.reset();
  };
  const std::size_t n = std::min(p.size(), labels.size());
  for (std::size_t t = 0; t < n; ++t) {
    const ClauseLabel label = labels[t];
    if (p[t].is_space && (label == ClauseLabel::kO || label == ClauseLabel::kI)) {
      continue;
    }
    switch (label) {
      case ClauseLabel::kB:
        if (open) close(last_in + 1);
        open = t;
        last_in = t;
        break;
      case ClauseLabel::kI:
        if (!open) open = t;
        last_in = t;
        break;
      case ClauseLabel::kE:
        if (!open) open = t;
        close(t + 1);
        break;
      case ClauseLabel::kO:
        if (open) close(last_in + 1);
        break;
    }
  }
  if (open) close(last_in + 1);
  return spans;
}

std::vector<SentenceSpan> AggregateSentences(
    const ParagraphStream& stream,
    const std::vector<std::vector<ClauseSpan>>& clauses,
    const MarkerLexicon& lexicon, const SegmenterConfig& config,
    std::vector<BoundaryDecision>* decisions) {
  config.Validate();
  std::vector<SentenceSpan> out;
  std::size_t base = 0;
  const std::size_t paragraphs = std::min(stream.paragraphs.size(), clauses.size());
  for (std::size_t pi = 0; pi < paragraphs; ++pi) {
    const Paragraph& p = stream.paragraphs[pi];
    const std::vector<ClauseSpan>& cs = clauses[pi];
    const std::size_t m = cs.size();
    if (m == 0) continue;

    // Subjects: explicit per clause, effective = inherited through
    // subjectless clauses. Independent of the split decisions.
    std::vector<std::string> subject(m), effective(m);
    for (std::size_t k = 0; k < m; ++k) {
      subject[k] = ExplicitSubject(p, cs[k]);
      effective[k] = !subject[k].empty() || k == 0 ? subject[k] : effective[k - 1];
    }

    std::size_t start = base;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      PairContext ctx{p, Words(p, cs[k]), Words(p, cs[k + 1]), lexicon};
      BoundaryDecision d{pi, base + k, false, SegmentRule::kS3};
      bool decided = false;
      for (SegmentRule rule : config.pair_rule_order) {
        if (!config.enabled(rule)) continue;
        if (auto split = ApplyPairRule(rule, ctx)) {
          d.split = *split;
          d.rule = rule;
          decided = true;
          break;
        }
      }
      if (!decided && config.enabled(SegmentRule::kS3)) {
        switch (config.subject_shift) {
          case SubjectShift::kAlwaysSplit: d.split = true; break;
          case SubjectShift::kNeverSplit: d.split = false; break;
          case SubjectShift::kSurfaceHeuristic:
            d.split = !subject[k + 1].empty() && !effective[k].empty() &&
                      subject[k + 1] != effective[k];
            break;
        }
      }
      if (decisions != nullptr) decisions->push_back(d);
      if (d.split) {
        out.push_back({pi, start, base + k + 1});
        start = base + k + 1;
      }
    }
    out.push_back({pi, start, base + m});
    base += m;
  }
  return out;
}

std::string EmitSentenceMarkers(const std::vector<Sentence>& sentences,
                                TextFormat format) {
  if (format == TextFormat::kInline) return WriteInline(sentences, 4);
  Document doc;
  doc.sentences = sentences;
  return WriteColumnar(doc);
}

namespace {

// Splits each input sentence (one paragraph) at the aggregated sentence
// boundaries; `labels` per paragraph, or nullptr to keep the input labels.
Document Resplit(const Document& doc,
                 const std::vector<std::vector<ClauseSpan>>& clauses,
                 const std::vector<SentenceSpan>& sentences,
                 const std::vector<std::vector<ClauseLabel>>* labels) {
  Document out;
  out.id = doc.id;
  out.genre = doc.genre;
  out.paragraph_starts.emplace();

  std::size_t base = 0;
  std::size_t next_span = 0;
  for (std::size_t pi = 0; pi < doc.sentences.size(); ++pi) {
    const Sentence& input = doc.sentences[pi];
    const std::vector<ClauseSpan>& cs = clauses[pi];
    if (input.tokens.empty()) continue;

    // Token cut points: the first token of every sentence but the first.
    std::vector<std::size_t> cuts;
    bool first = true;
    while (next_span < sentences.size() && sentences[next_span].paragraph == pi) {
      if (!first) cuts.push_back(cs[sentences[next_span].first_clause - base].start);
      first = false;
      ++next_span;
    }
    cuts.push_back(input.tokens.size());

    out.paragraph_starts->push_back(out.sentences.size());
    std::size_t from = 0;
    for (std::size_t cut : cuts) {
      Sentence sentence;
      for (std::size_t t = from; t < cut; ++t) {
        Token token = input.tokens[t];
        if (labels != nullptr) token.clause = (*labels)[pi][t];
        sentence.tokens.push_back(std::move(token));
      }
      out.sentences.push_back(std::move(sentence));
      from = cut;
    }
    base += cs.size();
  }
  return out;
}

ParagraphStream StreamOf(const Document& doc) {
  ParagraphStream stream;
  for (const Sentence& s : doc.sentences) {
    stream.paragraphs.push_back(ParagraphFromSentence(s));
  }
  return stream;
}

}  // namespace

Document SegmentDocument(const Document& doc, const MarkerLexicon& lexicon,
                         const SegmenterConfig& config) {
  const ParagraphStream stream = StreamOf(doc);
  const auto clauses = DetectClauses(stream, lexicon, config);
  const auto sentences = AggregateSentences(stream, clauses, lexicon, config);
  std::vector<std::vector<ClauseLabel>> labels;
  for (std::size_t pi = 0; pi < doc.sentences.size(); ++pi) {
    labels.push_back(EmitClauseLabels(clauses[pi], doc.sentences[pi].tokens.size()));
  }
  return Resplit(doc, clauses, sentences, &labels);
}

Document AggregateDocument(const Document& doc, const MarkerLexicon& lexicon,
                           const SegmenterConfig& config) {
  const ParagraphStream stream = StreamOf(doc);
  std::vector<std::vector<ClauseSpan>> clauses;
  for (std::size_t pi = 0; pi < doc.sentences.size(); ++pi) {
    std::vector<ClauseLabel> labels;
    for (const Token& t : doc.sentences[pi].tokens) labels.push_back(t.clause);
    clauses.push_back(ClauseSpansFromLabels(stream.paragraphs[pi], labels));
  }
  const auto sentences = AggregateSentences(stream, clauses, lexicon, config);
  return Resplit(doc, clauses, sentences, nullptr);
}

}  // namespace lst20
