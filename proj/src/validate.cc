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

#include "lst20/validate.h"

#include <algorithm>
#include <optional>
#include <tuple>

#include "text_util.h"

namespace lst20 {

namespace {

struct EdgePolicy {
  bool open_start_ok = false;  // forgive an orphan I/E at the first label
  bool open_end_ok = false;    // forgive a span left open at the end
};

std::string_view NeCode(TransitionViolation v) {
  switch (v) {
    case TransitionViolation::kOrphanI: return codes::kNeOrphanI;
    case TransitionViolation::kOrphanE: return codes::kNeOrphanE;
    case TransitionViolation::kCategoryMismatch: return codes::kNeCatMismatch;
    case TransitionViolation::kUnterminated: return codes::kNeUnterminated;
  }
  return codes::kNeUnterminated;
}

std::string_view ClsCode(TransitionViolation v) {
  switch (v) {
    case TransitionViolation::kOrphanI: return codes::kClsOrphanI;
    case TransitionViolation::kOrphanE: return codes::kClsOrphanE;
    // A single category cannot mismatch.
    case TransitionViolation::kCategoryMismatch:
    case TransitionViolation::kUnterminated: return codes::kClsUnterminated;
  }
  return codes::kClsUnterminated;
}

std::string Describe(TransitionViolation v, const std::string& prev,
                     const std::string& next) {
  switch (v) {
    case TransitionViolation::kOrphanI:
      return next + " does not continue an open span (previous: " + prev + ")";
    case TransitionViolation::kOrphanE:
      return next + " closes no open span (previous: " + prev + ")";
    case TransitionViolation::kCategoryMismatch:
      return next + " changes category inside the span opened as " + prev;
    case TransitionViolation::kUnterminated:
      return "span continued by " + prev + " is not closed before " + next;
  }
  return {};
}

bool IsOrphan(TransitionViolation v) {
  return v == TransitionViolation::kOrphanI || v == TransitionViolation::kOrphanE;
}

std::vector<LintIssue> CheckNe(const Sentence& sentence, std::size_t s,
                               EdgePolicy edges) {
  std::vector<LintIssue> out;
  std::optional<NeLabel> prev;
  // The open span began at an orphan I, which was already reported; leaving
  // it unclosed is not a second defect.
  bool orphan_span = false;
  const auto& tokens = sentence.tokens;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const NeLabel next = tokens[t].ne;
    const auto v = CheckNeTransition(prev, next);
    const bool excused = t == 0 && edges.open_start_ok && v && IsOrphan(*v);
    const bool repeat =
        orphan_span && v && *v == TransitionViolation::kUnterminated;
    if (v && !excused && !repeat) {
      out.push_back({Severity::kError, std::string(NeCode(*v)),
                     Describe(*v, prev ? ToString(*prev) : "start",
                              ToString(next)),
                     s, t, Layer::kNe});
    }
    orphan_span = v ? *v == TransitionViolation::kOrphanI && !excused
                    : orphan_span && next.prefix() == BoundaryPrefix::kI;
    prev = next;
  }
  if (!tokens.empty() && !edges.open_end_ok && !orphan_span) {
    if (auto v = CheckNeTransition(prev, std::nullopt)) {
      out.push_back({Severity::kError, std::string(NeCode(*v)),
                     Describe(*v, ToString(*prev), "sentence end"), s,
                     tokens.size() - 1, Layer::kNe});
    }
  }
  return out;
}

bool ClauseTransparent(const Token& token) {
  return token.is_space &&
         (token.clause == ClauseLabel::kO || token.clause == ClauseLabel::kI);
}

std::vector<LintIssue> CheckClauses(const Sentence& sentence, std::size_t s,
                                    EdgePolicy edges) {
  std::vector<LintIssue> out;
  const auto& tokens = sentence.tokens;
  std::vector<std::size_t> idx;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    if (!ClauseTransparent(tokens[t])) idx.push_back(t);
  }

  std::optional<ClauseLabel> prev;
  bool orphan_span = false;  // as in CheckNe
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const ClauseLabel next = tokens[idx[k]].clause;
    const auto v = CheckClauseTransition(prev, next);
    const bool excused = k == 0 && edges.open_start_ok && v && IsOrphan(*v);
    const bool repeat =
        orphan_span && v && *v == TransitionViolation::kUnterminated;
    if (v && !excused && !repeat) {
      out.push_back({Severity::kError, std::string(ClsCode(*v)),
                     Describe(*v, prev ? std::string(ToString(*prev)) : "start",
                              std::string(ToString(next))),
                     s, idx[k], Layer::kCls});
    }
    orphan_span = v ? *v == TransitionViolation::kOrphanI && !excused
                    : orphan_span && next == ClauseLabel::kI;
    prev = next;
  }
  if (!idx.empty() && !edges.open_end_ok && !orphan_span) {
    if (auto v = CheckClauseTransition(prev, std::nullopt)) {
      out.push_back({Severity::kError, std::string(ClsCode(*v)),
                     Describe(*v, std::string(ToString(*prev)), "sentence end"),
                     s, idx.back(), Layer::kCls});
    }
  }

  // Guideline warnings over well-formed spans: B..E, or a lone B.
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (tokens[idx[k]].clause != ClauseLabel::kB) continue;
    std::optional<std::size_t> last;
    if (k + 1 == idx.size() || tokens[idx[k + 1]].clause == ClauseLabel::kB ||
        tokens[idx[k + 1]].clause == ClauseLabel::kO) {
      last = idx[k];
      out.push_back({Severity::kWarning, std::string(codes::kClsSingleton),
                     "single-token clause (lone B_CLS)", s, idx[k],
                     Layer::kCls});
    } else {
      std::size_t j = k + 1;
      while (j < idx.size() && tokens[idx[j]].clause == ClauseLabel::kI) ++j;
      if (j < idx.size() && tokens[idx[j]].clause == ClauseLabel::kE) {
        last = idx[j];
      }
    }
    if (!last) continue;
    bool has_verb = false;
    for (std::size_t t = idx[k]; t <= *last; ++t) {
      has_verb = has_verb || tokens[t].pos == PosTag::kVV;
    }
    if (!has_verb) {
      out.push_back({Severity::kWarning, std::string(codes::kClsNoVerb),
                     "clause spanning tokens " + std::to_string(idx[k]) + ".." +
                         std::to_string(*last) + " contains no VV token",
                     s, idx[k], Layer::kCls});
    }
  }
  return out;
}

bool IsUrlChar(char c) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
      (c >= '0' && c <= '9')) {
    return true;
  }
  return std::string_view("-._~:/?#[]@!$&'()*+,;=%").find(c) !=
         std::string_view::npos;
}

bool AllUrlChars(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), IsUrlChar);
}

// A token that can end a split URL: URL characters with some substance, so
// that sentence-final "." or ")" after a URL does not count.
bool IsUrlContinuation(std::string_view s) {
  return AllUrlChars(s) && std::any_of(s.begin(), s.end(), [](char c) {
           return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '/';
         });
}

constexpr std::size_t kMaxUrlPieces = 8;

}  // namespace

bool IsKnownCode(std::string_view code) {
  static constexpr std::array<std::string_view, 12> kCodes = {
      codes::kNeOrphanI,     codes::kNeOrphanE,        codes::kNeCatMismatch,
      codes::kNeUnterminated, codes::kClsOrphanI,      codes::kClsOrphanE,
      codes::kClsUnterminated, codes::kClsSingleton,   codes::kClsNoVerb,
      codes::kSpaceNotPu,    codes::kUrlSplit,         codes::kPunctRunSplit,
  };
  if (code.starts_with("FORMAT_")) return code.size() > 7;
  return std::find(kCodes.begin(), kCodes.end(), code) != kCodes.end();
}

std::string_view ToString(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

std::string_view ToString(Layer layer) {
  switch (layer) {
    case Layer::kPos: return "POS";
    case Layer::kNe: return "NE";
    case Layer::kCls: return "CLS";
    case Layer::kFormat: return "FORMAT";
  }
  return "FORMAT";
}

void LintReport::Add(LintIssue issue) {
  ++counts_[static_cast<std::size_t>(issue.severity)];
  issues_.push_back(std::move(issue));
}

void LintReport::Append(const std::vector<LintIssue>& issues) {
  for (const LintIssue& issue : issues) Add(issue);
}

void LintReport::Sort() {
  std::stable_sort(issues_.begin(), issues_.end(),
                   [](const LintIssue& a, const LintIssue& b) {
                     return std::tie(a.sentence, a.token, a.code) <
                            std::tie(b.sentence, b.token, b.code);
                   });
}

bool LooksLikeUrl(std::string_view text) {
  for (std::string_view prefix : {"https://", "http://", "www."}) {
    if (text.starts_with(prefix)) return AllUrlChars(text.substr(prefix.size()));
  }
  return false;
}

std::vector<LintIssue> ValidateNeSequence(const Sentence& sentence,
                                          std::size_t sentence_index) {
  return CheckNe(sentence, sentence_index, {});
}

std::vector<LintIssue> ValidateClauseSequence(const Sentence& sentence,
                                              std::size_t sentence_index) {
  return CheckClauses(sentence, sentence_index, {});
}

std::vector<LintIssue> ValidateTokenTags(const Sentence& sentence,
                                         std::size_t s) {
  std::vector<LintIssue> out;
  const auto& tokens = sentence.tokens;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const Token& tok = tokens[t];
    if (tok.is_space && tok.pos != PosTag::kPU) {
      out.push_back({Severity::kError, std::string(codes::kSpaceNotPu),
                     "white-space token tagged " +
                         std::string(ToString(tok.pos)) + ", expected PU",
                     s, t, Layer::kPos});
    }
    if (!tok.is_space) {
      const std::u32string cps = internal::DecodeUtf8(tok.surface);
      if (std::any_of(cps.begin(), cps.end(), internal::IsUnicodeSpace)) {
        out.push_back({Severity::kWarning,
                       std::string(codes::kFormatWhitespaceSurface),
                       "surface '" + tok.surface + "' contains white space",
                       s, t, Layer::kFormat});
      }
    }
  }

  // URLs split over several tokens; one warning per split URL.
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    if (tokens[t].is_space || !AllUrlChars(tokens[t].surface)) continue;
    std::string joined = tokens[t].surface;
    std::string url;
    std::size_t end = t;
    for (std::size_t j = t + 1;
         j < tokens.size() && j < t + kMaxUrlPieces &&
         !tokens[j].is_space && AllUrlChars(tokens[j].surface);
         ++j) {
      joined += tokens[j].surface;
      if (IsUrlContinuation(tokens[j].surface) && LooksLikeUrl(joined)) {
        end = j;
        url = joined;
      }
    }
    if (end > t) {
      out.push_back({Severity::kWarning, std::string(codes::kUrlSplit),
                     "URL '" + url +
                         "' is split over tokens " + std::to_string(t) + ".." +
                         std::to_string(end),
                     s, t, Layer::kFormat});
      t = end;
    }
  }

  // Runs of single-character non-Thai punctuation tokens.
  auto single_punct = [&](std::size_t t) {
    if (tokens[t].is_space) return false;
    const std::u32string cps = internal::DecodeUtf8(tokens[t].surface);
    return cps.size() == 1 && internal::IsNonThaiPunctuation(cps[0]);
  };
  for (std::size_t t = 0; t + 1 < tokens.size(); ++t) {
    if (!single_punct(t) || !single_punct(t + 1)) continue;
    std::size_t end = t + 1;
    while (end + 1 < tokens.size() && single_punct(end + 1)) ++end;
    out.push_back({Severity::kWarning, std::string(codes::kPunctRunSplit),
                   "consecutive punctuation marks in tokens " +
                       std::to_string(t) + ".." + std::to_string(end) +
                       " form one token",
                   s, t, Layer::kFormat});
    t = end;
  }
  return out;
}

LintReport LintDocument(const Document& doc, const LintOptions& options) {
  LintReport report;
  const std::size_t n = doc.sentences.size();
  for (std::size_t s = 0; s < n; ++s) {
    EdgePolicy edges;
    edges.open_start_ok = options.excerpt && s == 0;
    edges.open_end_ok = options.excerpt && s + 1 == n;
    const Sentence& sentence = doc.sentences[s];
    report.Append(CheckNe(sentence, s, edges));
    report.Append(CheckClauses(sentence, s, edges));
    report.Append(ValidateTokenTags(sentence, s));
  }
  report.Sort();
  return report;
}

LintIssue IssueFromFormatError(const FormatError& error) {
  std::string message = error.reason;
  if (error.line > 0) message = "line " + std::to_string(error.line) + ": " + message;
  return {Severity::kError, error.code, std::move(message), error.sentence,
          error.token, Layer::kFormat};
}

}  // namespace lst20
