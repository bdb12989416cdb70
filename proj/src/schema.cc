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

#include "lst20/schema.h"

#include <utility>

namespace lst20 {

namespace {

constexpr std::array<std::string_view, kPosTagCount> kPosNames = {
    "AJ", "AV", "AX", "CC", "CL", "FX", "IJ", "NG",
    "NN", "NU", "PA", "PR", "PS", "PU", "VV", "XX",
};

constexpr std::array<std::string_view, kNeCategoryCount> kNeNames = {
    "TTL", "DES", "PER", "ORG", "LOC", "DTM", "BRN", "MEA", "NUM", "TRM",
};

constexpr std::array<std::string_view, 4> kClauseNames = {
    "B_CLS", "I_CLS", "E_CLS", "O"};

std::optional<NeCategory> TryParseNeCategory(std::string_view text) {
  for (std::size_t i = 0; i < kNeNames.size(); ++i) {
    if (kNeNames[i] == text) return kAllNeCategories[i];
  }
  return std::nullopt;
}

std::optional<BoundaryPrefix> PrefixFromChar(char c) {
  switch (c) {
    case 'B': return BoundaryPrefix::kB;
    case 'I': return BoundaryPrefix::kI;
    case 'E': return BoundaryPrefix::kE;
    default: return std::nullopt;
  }
}

// The BIEO automaton over abstract (prefix, category) pairs. `Cat` only needs
// equality.
template <typename Cat>
struct Boundary {
  BoundaryPrefix prefix;
  Cat category;
};

template <typename Cat>
std::optional<TransitionViolation> CheckBoundary(
    const std::optional<Boundary<Cat>>& prev,
    const std::optional<Boundary<Cat>>& next) {
  const bool open_b = prev && prev->prefix == BoundaryPrefix::kB;
  const bool open_i = prev && prev->prefix == BoundaryPrefix::kI;
  if (!next) {
    if (open_i) return TransitionViolation::kUnterminated;
    return std::nullopt;
  }
  switch (next->prefix) {
    case BoundaryPrefix::kO:
    case BoundaryPrefix::kB:
      if (open_i) return TransitionViolation::kUnterminated;
      return std::nullopt;
    case BoundaryPrefix::kI:
    case BoundaryPrefix::kE:
      if (!open_b && !open_i) {
        return next->prefix == BoundaryPrefix::kI
                   ? TransitionViolation::kOrphanI
                   : TransitionViolation::kOrphanE;
      }
      if (!(prev->category == next->category)) {
        return TransitionViolation::kCategoryMismatch;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Boundary<NeCategory>> ToBoundary(const std::optional<NeLabel>& l) {
  if (!l) return std::nullopt;
  return Boundary<NeCategory>{l->prefix(),
                              l->category().value_or(NeCategory::kTTL)};
}

std::optional<Boundary<int>> ToBoundary(const std::optional<ClauseLabel>& l) {
  if (!l) return std::nullopt;
  return Boundary<int>{PrefixOf(*l), 0};
}

}  // namespace

UnknownTag::UnknownTag(std::string text)
    : Error("unknown POS tag '" + text + "'"), text_(std::move(text)) {}

MalformedLabel::MalformedLabel(std::string text)
    : Error("malformed label '" + text + "'"), text_(std::move(text)) {}

UnknownCategory::UnknownCategory(std::string text)
    : Error("unknown named-entity category in '" + text + "'"),
      text_(std::move(text)) {}

NeLabel NeLabel::Make(BoundaryPrefix prefix, NeCategory category) {
  if (prefix == BoundaryPrefix::kO) {
    throw Error("NeLabel::Make: O carries no category");
  }
  return NeLabel(prefix, category);
}

std::optional<PosTag> TryParsePosTag(std::string_view text) {
  for (std::size_t i = 0; i < kPosNames.size(); ++i) {
    if (kPosNames[i] == text) return kAllPosTags[i];
  }
  return std::nullopt;
}

PosTag ParsePosTag(std::string_view text) {
  if (auto tag = TryParsePosTag(text)) return *tag;
  throw UnknownTag(std::string(text));
}

NeCategory ParseNeCategory(std::string_view text) {
  if (auto c = TryParseNeCategory(text)) return *c;
  throw UnknownCategory(std::string(text));
}

NeLabel ParseNeLabel(std::string_view text) {
  if (text == "O") return NeLabel::Outside();
  if (text.size() < 3 || text[1] != '_') throw MalformedLabel(std::string(text));
  auto prefix = PrefixFromChar(text[0]);
  if (!prefix) throw MalformedLabel(std::string(text));
  auto category = TryParseNeCategory(text.substr(2));
  if (!category) throw UnknownCategory(std::string(text));
  return NeLabel::Make(*prefix, *category);
}

std::optional<NeLabel> TryParseNeLabel(std::string_view text) {
  if (text == "O") return NeLabel::Outside();
  if (text.size() < 3 || text[1] != '_') return std::nullopt;
  auto prefix = PrefixFromChar(text[0]);
  auto category = TryParseNeCategory(text.substr(2));
  if (!prefix || !category) return std::nullopt;
  return NeLabel::Make(*prefix, *category);
}

std::optional<ClauseLabel> TryParseClauseLabel(std::string_view text) {
  for (std::size_t i = 0; i < kClauseNames.size(); ++i) {
    if (kClauseNames[i] == text) return kAllClauseLabels[i];
  }
  return std::nullopt;
}

ClauseLabel ParseClauseLabel(std::string_view text) {
  if (auto label = TryParseClauseLabel(text)) return *label;
  throw MalformedLabel(std::string(text));
}

std::string_view ToString(PosTag tag) {
  return kPosNames[static_cast<std::size_t>(tag)];
}

std::string_view ToString(NeCategory category) {
  return kNeNames[static_cast<std::size_t>(category)];
}

std::string ToString(NeLabel label) {
  if (label.is_outside()) return "O";
  std::string out;
  switch (label.prefix()) {
    case BoundaryPrefix::kB: out = "B_"; break;
    case BoundaryPrefix::kI: out = "I_"; break;
    case BoundaryPrefix::kE: out = "E_"; break;
    case BoundaryPrefix::kO: break;
  }
  out += ToString(*label.category());
  return out;
}

std::string_view ToString(ClauseLabel label) {
  return kClauseNames[static_cast<std::size_t>(label)];
}

BoundaryPrefix PrefixOf(ClauseLabel label) {
  switch (label) {
    case ClauseLabel::kB: return BoundaryPrefix::kB;
    case ClauseLabel::kI: return BoundaryPrefix::kI;
    case ClauseLabel::kE: return BoundaryPrefix::kE;
    case ClauseLabel::kO: return BoundaryPrefix::kO;
  }
  return BoundaryPrefix::kO;
}

std::optional<TransitionViolation> CheckNeTransition(std::optional<NeLabel> prev,
                                                     std::optional<NeLabel> next) {
  return CheckBoundary(ToBoundary(prev), ToBoundary(next));
}

bool NeTransitionValid(std::optional<NeLabel> prev, std::optional<NeLabel> next) {
  return !CheckNeTransition(prev, next).has_value();
}

std::optional<TransitionViolation> CheckClauseTransition(
    std::optional<ClauseLabel> prev, std::optional<ClauseLabel> next) {
  return CheckBoundary(ToBoundary(prev), ToBoundary(next));
}

bool ClauseTransitionValid(std::optional<ClauseLabel> prev,
                           std::optional<ClauseLabel> next) {
  return !CheckClauseTransition(prev, next).has_value();
}

}  // namespace lst20
