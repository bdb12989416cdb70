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

// Closed tagsets of the LST20 annotation layers and the BIEO label algebra.
//
// All tag parsing is exact and case-sensitive: "NN" parses, "nn" and " NN"
// do not. Callers that need normalization must do it before parsing.

#ifndef LST20_SCHEMA_H_
#define LST20_SCHEMA_H_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lst20 {

// Base of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownTag : public Error {
 public:
  explicit UnknownTag(std::string text);
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

class MalformedLabel : public Error {
 public:
  explicit MalformedLabel(std::string text);
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

class UnknownCategory : public Error {
 public:
  explicit UnknownCategory(std::string text);
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

enum class PosTag : std::uint8_t {
  kAJ, kAV, kAX, kCC, kCL, kFX, kIJ, kNG,
  kNN, kNU, kPA, kPR, kPS, kPU, kVV, kXX,
};
inline constexpr std::size_t kPosTagCount = 16;
inline constexpr std::array<PosTag, kPosTagCount> kAllPosTags = {
    PosTag::kAJ, PosTag::kAV, PosTag::kAX, PosTag::kCC,
    PosTag::kCL, PosTag::kFX, PosTag::kIJ, PosTag::kNG,
    PosTag::kNN, PosTag::kNU, PosTag::kPA, PosTag::kPR,
    PosTag::kPS, PosTag::kPU, PosTag::kVV, PosTag::kXX,
};

enum class NeCategory : std::uint8_t {
  kTTL, kDES, kPER, kORG, kLOC, kDTM, kBRN, kMEA, kNUM, kTRM,
};
inline constexpr std::size_t kNeCategoryCount = 10;
inline constexpr std::array<NeCategory, kNeCategoryCount> kAllNeCategories = {
    NeCategory::kTTL, NeCategory::kDES, NeCategory::kPER, NeCategory::kORG,
    NeCategory::kLOC, NeCategory::kDTM, NeCategory::kBRN, NeCategory::kMEA,
    NeCategory::kNUM, NeCategory::kTRM,
};

enum class BoundaryPrefix : std::uint8_t { kB, kI, kE, kO };

// A named-entity boundary label: `O`, or a B/I/E prefix with a category.
class NeLabel {
 public:
  // Defaults to `O`.
  constexpr NeLabel() = default;

  static constexpr NeLabel Outside() { return NeLabel(); }
  // `prefix` must not be kO; use Outside() for that.
  static NeLabel Make(BoundaryPrefix prefix, NeCategory category);

  constexpr BoundaryPrefix prefix() const { return prefix_; }
  constexpr std::optional<NeCategory> category() const {
    if (prefix_ == BoundaryPrefix::kO) return std::nullopt;
    return category_;
  }
  constexpr bool is_outside() const { return prefix_ == BoundaryPrefix::kO; }

  friend constexpr bool operator==(const NeLabel& a, const NeLabel& b) {
    return a.prefix_ == b.prefix_ &&
           (a.prefix_ == BoundaryPrefix::kO || a.category_ == b.category_);
  }

 private:
  constexpr NeLabel(BoundaryPrefix prefix, NeCategory category)
      : prefix_(prefix), category_(category) {}

  BoundaryPrefix prefix_ = BoundaryPrefix::kO;
  NeCategory category_ = NeCategory::kTTL;  // meaningless when prefix_ is kO
};

enum class ClauseLabel : std::uint8_t { kB, kI, kE, kO };
inline constexpr std::array<ClauseLabel, 4> kAllClauseLabels = {
    ClauseLabel::kB, ClauseLabel::kI, ClauseLabel::kE, ClauseLabel::kO};

PosTag ParsePosTag(std::string_view text);
NeCategory ParseNeCategory(std::string_view text);
NeLabel ParseNeLabel(std::string_view text);
ClauseLabel ParseClauseLabel(std::string_view text);

// Non-throwing variants, for format sniffing.
std::optional<PosTag> TryParsePosTag(std::string_view text);
std::optional<NeLabel> TryParseNeLabel(std::string_view text);
std::optional<ClauseLabel> TryParseClauseLabel(std::string_view text);

std::string_view ToString(PosTag tag);
std::string_view ToString(NeCategory category);
std::string ToString(NeLabel label);
std::string_view ToString(ClauseLabel label);

// Clause labels expressed in the prefix vocabulary of NE labels.
BoundaryPrefix PrefixOf(ClauseLabel label);

// How a BIEO transition can fail.
enum class TransitionViolation : std::uint8_t {
  kOrphanI,       // I_x with no open span
  kOrphanE,       // E_x with no open span
  kCategoryMismatch,  // I_y / E_y continuing a span of category x != y
  kUnterminated,  // span left open by O, B_y, or sentence end after I_x
};

// `prev` == nullopt is sentence start; `next` == nullopt is sentence end.
//
// After start, O, or E_x: O or B_y. After B_x: O, B_y (B_x alone is a
// single-token entity), I_x or E_x. After I_x: I_x or E_x only. Sentence end
// is legal unless the last label was I_x.
bool NeTransitionValid(std::optional<NeLabel> prev, std::optional<NeLabel> next);

// Same automaton, returning the kind of failure instead of a verdict.
std::optional<TransitionViolation> CheckNeTransition(std::optional<NeLabel> prev,
                                                     std::optional<NeLabel> next);

// The automaton over the single category CLS.
std::optional<TransitionViolation> CheckClauseTransition(
    std::optional<ClauseLabel> prev, std::optional<ClauseLabel> next);
bool ClauseTransitionValid(std::optional<ClauseLabel> prev,
                           std::optional<ClauseLabel> next);

}  // namespace lst20

#endif  // LST20_SCHEMA_H_
