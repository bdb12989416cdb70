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

#include <algorithm>
#include <sstream>
#include <utility>

#include "text_util.h"

namespace lst20 {

namespace {

using internal::Split;
using internal::Trim;

constexpr std::size_t kColumnarFields = 4;

bool HasControlBreak(std::string_view s) {
  return s.find_first_of("\t\r\n") != std::string_view::npos;
}

// Parses the three tag fields, reporting the first failure.
std::optional<FormatError> ParseLayers(std::string_view pos_text,
                                       std::string_view ne_text,
                                       std::string_view cls_text, Token& token) {
  try {
    token.pos = ParsePosTag(pos_text);
  } catch (const Error& e) {
    return FormatError{"FORMAT_BAD_POS", e.what()};
  }
  try {
    token.ne = ParseNeLabel(ne_text);
  } catch (const Error& e) {
    return FormatError{"FORMAT_BAD_NE", e.what()};
  }
  try {
    token.clause = ParseClauseLabel(cls_text);
  } catch (const Error& e) {
    return FormatError{"FORMAT_BAD_CLS", e.what()};
  }
  return std::nullopt;
}

// Collects errors, or throws at the first one in strict mode.
class ErrorSink {
 public:
  explicit ErrorSink(ParseMode mode) : mode_(mode) {}

  void Add(FormatError error) {
    if (mode_ == ParseMode::kStrict) throw FormatException(std::move(error));
    errors_.push_back(std::move(error));
  }
  std::vector<FormatError> Take() { return std::move(errors_); }

 private:
  ParseMode mode_;
  std::vector<FormatError> errors_;
};

// Number of annotation layers a `/`-split inline token was written with.
// POS names and NE labels are disjoint, and the clause label set only
// overlaps NE labels in `O`, so the written arity is always recoverable.
int InferArity(const std::vector<std::string_view>& parts) {
  const std::size_t n = parts.size();
  if (n >= 4 && TryParsePosTag(parts[n - 3]) && TryParseNeLabel(parts[n - 2]) &&
      TryParseClauseLabel(parts[n - 1])) {
    return 4;
  }
  if (n >= 3 && TryParsePosTag(parts[n - 2]) && TryParseNeLabel(parts[n - 1])) {
    return 3;
  }
  if (n >= 2 && TryParsePosTag(parts[n - 1])) return 2;
  return 1;
}

std::string JoinSurface(const std::vector<std::string_view>& parts,
                        std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) out += '/';
    out += parts[i];
  }
  return out;
}

// Parses one inline sentence body (the text between two `||`).
void ParseInlineSentence(std::string_view body, std::size_t sentence_index,
                         ErrorSink& sink, std::vector<Sentence>& out) {
  std::vector<std::string_view> pieces;
  for (std::string_view piece : Split(body, '|')) {
    piece = Trim(piece);
    if (!piece.empty()) pieces.push_back(piece);
  }
  if (pieces.empty()) return;

  std::vector<std::vector<std::string_view>> parts;
  int layers = 1;
  for (std::string_view piece : pieces) {
    parts.push_back(Split(piece, '/'));
    layers = std::max(layers, InferArity(parts.back()));
  }

  Sentence sentence;
  for (std::size_t t = 0; t < pieces.size(); ++t) {
    auto fail = [&](std::string code, std::string reason) {
      sink.Add(FormatError{std::move(code), std::move(reason), 0,
                           sentence_index, t});
    };
    const auto& p = parts[t];
    if (!internal::IsValidUtf8(pieces[t])) {
      fail("FORMAT_ENCODING", "invalid UTF-8");
      continue;
    }
    if (layers == 1) {
      fail("FORMAT_ARITY", "token '" + std::string(pieces[t]) +
                               "' has no POS layer");
      continue;
    }
    if (p.size() < static_cast<std::size_t>(layers)) {
      fail("FORMAT_ARITY", "token '" + std::string(pieces[t]) + "' has " +
                               std::to_string(p.size()) +
                               " layer(s); the sentence uses " +
                               std::to_string(layers));
      continue;
    }
    const std::size_t surface_parts = p.size() - layers + 1;
    Token token;
    token.surface = JoinSurface(p, surface_parts);
    if (token.surface.empty()) {
      fail("FORMAT_EMPTY_FIELD", "empty surface");
      continue;
    }
    const std::string_view pos = p[surface_parts];
    const std::string_view ne = layers >= 3 ? p[surface_parts + 1] : "O";
    const std::string_view cls = layers >= 4 ? p[surface_parts + 2] : "O";
    if (auto err = ParseLayers(pos, ne, cls, token)) {
      err->sentence = sentence_index;
      err->token = t;
      err->reason += " (sentence uses " + std::to_string(layers) + " layers)";
      sink.Add(std::move(*err));
      continue;
    }
    if (token.surface == kInlineSpaceGlyph) {
      token.surface = std::string(kSpaceSurface);
      token.is_space = true;
    }
    sentence.tokens.push_back(std::move(token));
  }
  if (!sentence.tokens.empty()) out.push_back(std::move(sentence));
}

void CheckWritableSurface(const Token& token, bool inline_form) {
  if (token.is_space) return;
  if (token.surface.empty()) throw WriteError("token with empty surface");
  if (HasControlBreak(token.surface)) {
    throw WriteError("surface contains a tab or line break: '" +
                     token.surface + "'");
  }
  if (inline_form) {
    if (token.surface.find('|') != std::string::npos) {
      throw WriteError("surface contains '|': '" + token.surface + "'");
    }
    if (Trim(token.surface).size() != token.surface.size()) {
      throw WriteError("surface has leading or trailing white space: '" +
                       token.surface + "'");
    }
    if (token.surface == kInlineSpaceGlyph) {
      throw WriteError("a non-space word spelled '␣' cannot be written inline");
    }
  } else if (token.surface == kSpaceSurface) {
    throw WriteError(
        "a literal '_' word cannot be written in columnar form; '_' is the "
        "white-space glyph");
  }
}

}  // namespace

Token Token::Space(NeLabel ne, ClauseLabel clause) {
  Token t;
  t.surface = std::string(kSpaceSurface);
  t.pos = PosTag::kPU;
  t.ne = ne;
  t.clause = clause;
  t.is_space = true;
  return t;
}

std::optional<TextFormat> ParseTextFormat(std::string_view name) {
  if (name == "columnar") return TextFormat::kColumnar;
  if (name == "inline") return TextFormat::kInline;
  return std::nullopt;
}

std::string_view ToString(TextFormat format) {
  return format == TextFormat::kColumnar ? "columnar" : "inline";
}

std::string FormatError::Describe() const {
  std::ostringstream os;
  if (line > 0) os << "line " << line << ": ";
  os << code << ": " << reason;
  return os.str();
}

FormatException::FormatException(FormatError error)
    : Error(error.Describe()), error_(std::move(error)) {}

ColumnarResult ReadColumnar(std::string_view text, std::string id,
                            ParseMode mode) {
  ColumnarResult result;
  result.document.id = std::move(id);
  ErrorSink sink(mode);
  auto& sentences = result.document.sentences;
  Sentence current;

  std::vector<std::string_view> lines = Split(text, '\n');
  // A final newline terminates the last line rather than starting a new one.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();

  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (line.empty()) {
      if (!current.tokens.empty()) {
        sentences.push_back(std::move(current));
        current = Sentence{};
      }
      continue;
    }
    auto fail = [&](std::string code, std::string reason) {
      sink.Add(FormatError{std::move(code), std::move(reason), i + 1,
                           sentences.size(), current.tokens.size()});
    };
    if (line.back() == '\r') {
      fail("FORMAT_LINE_ENDING", "carriage return; lines must end in LF only");
      continue;
    }
    if (!internal::IsValidUtf8(line)) {
      fail("FORMAT_ENCODING", "invalid UTF-8");
      continue;
    }
    const std::vector<std::string_view> fields = Split(line, '\t');
    if (fields.size() != kColumnarFields) {
      std::string reason = "expected 4 tab-separated fields, found " +
                           std::to_string(fields.size());
      if (fields.size() > kColumnarFields) reason += " (tab inside a field?)";
      fail("FORMAT_FIELD_COUNT", std::move(reason));
      continue;
    }
    if (std::any_of(fields.begin(), fields.end(),
                    [](std::string_view f) { return f.empty(); })) {
      fail("FORMAT_EMPTY_FIELD", "empty field");
      continue;
    }
    Token token;
    token.surface = std::string(fields[0]);
    token.is_space = fields[0] == kSpaceSurface;
    if (auto err = ParseLayers(fields[1], fields[2], fields[3], token)) {
      fail(std::move(err->code), std::move(err->reason));
      continue;
    }
    current.tokens.push_back(std::move(token));
  }
  if (!current.tokens.empty()) sentences.push_back(std::move(current));
  result.errors = sink.Take();
  return result;
}

std::string WriteColumnar(const Document& doc) {
  std::string out;
  bool first = true;
  for (const Sentence& sentence : doc.sentences) {
    if (sentence.tokens.empty()) throw WriteError("empty sentence");
    if (!first) out += '\n';
    first = false;
    for (const Token& token : sentence.tokens) {
      CheckWritableSurface(token, /*inline_form=*/false);
      out += token.is_space ? kSpaceSurface : std::string_view(token.surface);
      out += '\t';
      out += ToString(token.pos);
      out += '\t';
      out += ToString(token.ne);
      out += '\t';
      out += ToString(token.clause);
      out += '\n';
    }
  }
  return out;
}

InlineResult ReadInline(std::string_view text, ParseMode mode) {
  InlineResult result;
  ErrorSink sink(mode);
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '|' && i + 1 < text.size() && text[i + 1] == '|') {
      ParseInlineSentence(text.substr(start, i - start),
                          result.sentences.size(), sink, result.sentences);
      i += 2;
      start = i;
    } else {
      ++i;
    }
  }
  // Material after the last `||` is accepted as a final sentence.
  ParseInlineSentence(text.substr(start), result.sentences.size(), sink,
                      result.sentences);
  result.errors = sink.Take();
  return result;
}

std::string WriteInline(const std::vector<Sentence>& sentences, int layers) {
  if (layers < 2 || layers > 4) {
    throw Error("inline layer count must be 2, 3 or 4, got " +
                std::to_string(layers));
  }
  std::string out;
  for (const Sentence& sentence : sentences) {
    if (sentence.tokens.empty()) throw WriteError("empty sentence");
    bool first = true;
    for (const Token& token : sentence.tokens) {
      CheckWritableSurface(token, /*inline_form=*/true);
      if (!first) out += " | ";
      first = false;
      out += token.is_space ? kInlineSpaceGlyph : std::string_view(token.surface);
      out += '/';
      out += ToString(token.pos);
      if (layers >= 3) {
        out += '/';
        out += ToString(token.ne);
      }
      if (layers >= 4) {
        out += '/';
        out += ToString(token.clause);
      }
    }
    out += " ||\n";
  }
  return out;
}

ColumnarResult ReadDocument(TextFormat format, std::string_view text,
                            std::string id, ParseMode mode) {
  if (format == TextFormat::kColumnar) {
    return ReadColumnar(text, std::move(id), mode);
  }
  InlineResult parsed = ReadInline(text, mode);
  ColumnarResult result;
  result.document.id = std::move(id);
  result.document.sentences = std::move(parsed.sentences);
  result.errors = std::move(parsed.errors);
  return result;
}

std::string WriteDocument(TextFormat format, const Document& doc, int layers) {
  if (format == TextFormat::kColumnar) return WriteColumnar(doc);
  return WriteInline(doc.sentences, layers);
}

std::string Convert(TextFormat from, TextFormat to, std::string_view text,
                    const ConvertOptions& options) {
  ColumnarResult parsed =
      ReadDocument(from, text, options.id, ParseMode::kStrict);
  return WriteDocument(to, parsed.document, options.layers);
}

}  // namespace lst20
