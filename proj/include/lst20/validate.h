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

// Lint engine: located diagnostics for label-sequence violations and
// guideline-level consistency rules.
//
// Diagnostic codes (closed list):
//
//   NE_ORPHAN_I NE_ORPHAN_E NE_CAT_MISMATCH NE_UNTERMINATED      Error
//   CLS_ORPHAN_I CLS_ORPHAN_E CLS_UNTERMINATED                   Error
//   CLS_SINGLETON CLS_NO_VERB                                    Warning
//   SPACE_NOT_PU                                                 Error
//   URL_SPLIT PUNCT_RUN_SPLIT                                    Warning
//   FORMAT_*  reader errors (Error), FORMAT_WHITESPACE_SURFACE (Warning)
//
// Space tokens labelled O or I_CLS are transparent to the clause checks:
// white space between clauses may carry either label.

#ifndef LST20_VALIDATE_H_
#define LST20_VALIDATE_H_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lst20/format.h"

namespace lst20 {

namespace codes {
inline constexpr std::string_view kNeOrphanI = "NE_ORPHAN_I";
inline constexpr std::string_view kNeOrphanE = "NE_ORPHAN_E";
inline constexpr std::string_view kNeCatMismatch = "NE_CAT_MISMATCH";
inline constexpr std::string_view kNeUnterminated = "NE_UNTERMINATED";
inline constexpr std::string_view kClsOrphanI = "CLS_ORPHAN_I";
inline constexpr std::string_view kClsOrphanE = "CLS_ORPHAN_E";
inline constexpr std::string_view kClsUnterminated = "CLS_UNTERMINATED";
inline constexpr std::string_view kClsSingleton = "CLS_SINGLETON";
inline constexpr std::string_view kClsNoVerb = "CLS_NO_VERB";
inline constexpr std::string_view kSpaceNotPu = "SPACE_NOT_PU";
inline constexpr std::string_view kUrlSplit = "URL_SPLIT";
inline constexpr std::string_view kPunctRunSplit = "PUNCT_RUN_SPLIT";
inline constexpr std::string_view kFormatWhitespaceSurface =
    "FORMAT_WHITESPACE_SURFACE";
}  // namespace codes

// True for the documented codes, including any FORMAT_* code.
bool IsKnownCode(std::string_view code);

enum class Severity { kError, kWarning };
enum class Layer { kPos, kNe, kCls, kFormat };

std::string_view ToString(Severity severity);
std::string_view ToString(Layer layer);

struct LintIssue {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  std::size_t sentence = 0;
  std::size_t token = 0;
  Layer layer = Layer::kFormat;

  friend bool operator==(const LintIssue&, const LintIssue&) = default;
};

class LintReport {
 public:
  void Add(LintIssue issue);
  void Append(const std::vector<LintIssue>& issues);
  // Stable sort by (sentence, token, code).
  void Sort();

  const std::vector<LintIssue>& issues() const { return issues_; }
  std::size_t count(Severity severity) const {
    return counts_[static_cast<std::size_t>(severity)];
  }
  std::size_t errors() const { return count(Severity::kError); }
  std::size_t warnings() const { return count(Severity::kWarning); }

 private:
  std::vector<LintIssue> issues_;
  std::array<std::size_t, 2> counts_{};
};

struct LintOptions {
  // The document is a window cut out of a larger file: a span already open
  // at the first token, or still open after the last, is not reported.
  bool excerpt = false;
};

// The *_sequence and token checks take the sentence's index so that issues
// carry a document location.
std::vector<LintIssue> ValidateNeSequence(const Sentence& sentence,
                                          std::size_t sentence_index = 0);
std::vector<LintIssue> ValidateClauseSequence(const Sentence& sentence,
                                              std::size_t sentence_index = 0);
std::vector<LintIssue> ValidateTokenTags(const Sentence& sentence,
                                         std::size_t sentence_index = 0);

LintReport LintDocument(const Document& doc, const LintOptions& options = {});

// Reader errors as FORMAT-layer issues.
LintIssue IssueFromFormatError(const FormatError& error);

// `www.` or `http(s)://` followed by a run of URL characters.
bool LooksLikeUrl(std::string_view text);

}  // namespace lst20

#endif  // LST20_VALIDATE_H_
