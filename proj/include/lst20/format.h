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

// Corpus data model and the two concrete serializations:
//
//   columnar  one token per line, four tab-separated fields
//             (word, POS, NE, clause), an empty line after each sentence.
//   inline    `surface/POS/NE/CLS | surface/POS/NE/CLS | ... ||`, one
//             sentence per `||`; trailing layers may be omitted uniformly.
//
// White-space tokens are `_` in columnar text and `␣` (U+2423) in inline
// text. In memory their surface is kSpaceSurface.

#ifndef LST20_FORMAT_H_
#define LST20_FORMAT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lst20/schema.h"

namespace lst20 {

inline constexpr std::string_view kSpaceSurface = "_";
inline constexpr std::string_view kInlineSpaceGlyph = "␣";

struct Token {
  std::string surface;
  PosTag pos = PosTag::kXX;
  NeLabel ne;
  ClauseLabel clause = ClauseLabel::kO;
  bool is_space = false;

  // A white-space token; white space is always tagged PU.
  static Token Space(NeLabel ne = NeLabel::Outside(),
                     ClauseLabel clause = ClauseLabel::kO);

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::vector<Token> tokens;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Document {
  std::string id;
  std::optional<std::string> genre;
  std::vector<Sentence> sentences;
  // Indices of paragraph-initial sentences. Not representable in either text
  // format; filled in by the segmenter only.
  std::optional<std::vector<std::size_t>> paragraph_starts;

  friend bool operator==(const Document&, const Document&) = default;
};

struct Corpus {
  std::vector<Document> documents;
};

enum class ParseMode { kPermissive, kStrict };
enum class TextFormat { kColumnar, kInline };

std::optional<TextFormat> ParseTextFormat(std::string_view name);
std::string_view ToString(TextFormat format);

// A located reader diagnostic. `line` is 1-based and set for columnar input;
// `sentence`/`token` are 0-based positions the offending item would have had.
struct FormatError {
  std::string code;  // one of the FORMAT_* codes
  std::string reason;
  std::size_t line = 0;
  std::size_t sentence = 0;
  std::size_t token = 0;

  std::string Describe() const;
};

// Thrown by strict-mode readers and by convert().
class FormatException : public Error {
 public:
  explicit FormatException(FormatError error);
  const FormatError& error() const { return error_; }

 private:
  FormatError error_;
};

// Thrown by writers for tokens the target format cannot represent.
class WriteError : public Error {
 public:
  using Error::Error;
};

struct ColumnarResult {
  Document document;
  std::vector<FormatError> errors;  // empty in strict mode
};

struct InlineResult {
  std::vector<Sentence> sentences;
  std::vector<FormatError> errors;
};

// Permissive mode skips bad lines and collects every error; strict mode
// throws FormatException at the first one.
ColumnarResult ReadColumnar(std::string_view text, std::string id,
                            ParseMode mode = ParseMode::kPermissive);
std::string WriteColumnar(const Document& doc);

InlineResult ReadInline(std::string_view text,
                        ParseMode mode = ParseMode::kPermissive);
// `layers` is 2 (surface/POS), 3 (+NE) or 4 (+clause).
std::string WriteInline(const std::vector<Sentence>& sentences, int layers = 4);

struct ConvertOptions {
  int layers = 4;          // inline output only
  std::string id = "doc";  // document id for columnar output
};

// Reader composed with writer. Reader errors surface as FormatException.
std::string Convert(TextFormat from, TextFormat to, std::string_view text,
                    const ConvertOptions& options = {});

// Reads either format into a Document.
ColumnarResult ReadDocument(TextFormat format, std::string_view text,
                            std::string id,
                            ParseMode mode = ParseMode::kPermissive);
std::string WriteDocument(TextFormat format, const Document& doc,
                          int layers = 4);

}  // namespace lst20

#endif  // LST20_FORMAT_H_
