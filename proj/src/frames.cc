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

#include "lst20/frames.h"

#include <array>
#include <utility>

#include "text_util.h"

namespace lst20 {

namespace {

struct BuiltInFrame {
  std::string_view id;
  std::string_view spec;
};

// Optional auxiliaries and trailing adverbs are parenthesized where the
// worked examples show them both present and absent.
constexpr std::array<BuiltInFrame, 18> kBuiltIn = {{
    {"NN.1", "_ VV (AV)"},
    {"NN.2", "NN VV _ (AV)"},
    {"NN.3", "NN VV PS _ (AV)"},
    {"NN.4", "_ CL AJ"},
    {"VV.1", "NN (AX) _ (AV)"},
    {"VV.2", "(AX) _ NN (AV)"},
    {"VV.3", "(AX) _ NN NN (AV)"},
    {"VV.4", "NN (AX) NN _ (NN) (AV)"},
    {"VV.5", "NN _ VV (NN) (AV)"},
    {"VV.6", "NN VV NN CC (AX) (NN) _ *?"},
    {"AJ.1", "NN (CL) _ VV"},
    {"AJ.2", "_ NN VV"},
    {"AJ.3", "NN _ NU CL VV"},
    {"AJ.4", "NN NU _ CL VV"},
    {"AV.1", "NN VV (NN) _"},
    {"AV.2", "_ NN VV NN"},
    {"AV.3", "_ NN VV NN"},
    {"AV.4", "NN VV NN _"},
}};

// Anchored backtracking over seq[begin, end). `failed` memoizes (slot, pos)
// states known not to complete; the hole fixes a position, so a state's
// outcome does not depend on how it was reached.
class Matcher {
 public:
  Matcher(const std::vector<PosTag>& seq, std::size_t candidate,
          const FramePattern& frame, std::size_t end)
      : seq_(seq),
        candidate_(candidate),
        slots_(frame.slots),
        end_(end),
        failed_((slots_.size() + 1) * (end + 1), false),
        lengths_(slots_.size(), 0) {}

  std::optional<std::vector<SlotRange>> Run(std::size_t begin) {
    if (!Step(0, begin)) return std::nullopt;
    std::vector<SlotRange> out;
    std::size_t at = begin;
    for (std::size_t len : lengths_) {
      out.push_back({at, at + len});
      at += len;
    }
    return out;
  }

 private:
  bool Step(std::size_t slot, std::size_t pos) {
    if (slot == slots_.size()) return pos == end_;
    const std::size_t key = slot * (end_ + 1) + pos;
    if (failed_[key]) return false;
    const FrameSlot& s = slots_[slot];
    const std::size_t left = end_ - pos;
    auto take = [&](std::size_t len) {
      lengths_[slot] = len;
      return Step(slot + 1, pos + len);
    };
    bool ok = false;
    switch (s.kind) {
      case SlotKind::kHole:
        ok = pos == candidate_ && left >= 1 && take(1);
        break;
      case SlotKind::kExact:
        ok = left >= 1 && seq_[pos] == s.tag && take(1);
        break;
      case SlotKind::kOptionalExact:
        ok = (left >= 1 && seq_[pos] == s.tag && take(1)) || take(0);
        break;
      case SlotKind::kPhrase:
      case SlotKind::kOptionalPhrase: {
        const std::size_t min = s.kind == SlotKind::kPhrase ? 1 : 0;
        for (std::size_t len = left + 1; len-- > min;) {
          // A phrase may not swallow the hole.
          if (len > 0 && pos <= candidate_ && candidate_ < pos + len) continue;
          if (take(len)) {
            ok = true;
            break;
          }
        }
        break;
      }
    }
    if (!ok) failed_[key] = true;
    return ok;
  }

  const std::vector<PosTag>& seq_;
  std::size_t candidate_;
  const std::vector<FrameSlot>& slots_;
  std::size_t end_;
  std::vector<bool> failed_;
  std::vector<std::size_t> lengths_;
};

std::optional<std::vector<SlotRange>> MatchWindow(const std::vector<PosTag>& seq,
                                                  std::size_t candidate,
                                                  const FramePattern& frame,
                                                  std::size_t begin, std::size_t end) {
  return Matcher(seq, candidate, frame, end).Run(begin);
}

}  // namespace

std::size_t FramePattern::hole_index() const {
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].kind == SlotKind::kHole) return i;
  }
  return slots.size();
}

FramePattern CompileFrame(std::string_view spec, std::string id) {
  FramePattern out;
  out.id = std::move(id);
  std::size_t holes = 0;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    const std::size_t start = spec.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    std::size_t stop = spec.find_first_of(" \t", start);
    if (stop == std::string_view::npos) stop = spec.size();
    const std::string_view item = spec.substr(start, stop - start);
    pos = stop;

    FrameSlot slot;
    if (item == "_") {
      ++holes;
    } else if (item == "*") {
      slot.kind = SlotKind::kPhrase;
    } else if (item == "*?") {
      slot.kind = SlotKind::kOptionalPhrase;
    } else {
      std::string_view tag = item;
      slot.kind = SlotKind::kExact;
      if (item.size() >= 2 && item.front() == '(' && item.back() == ')') {
        tag = item.substr(1, item.size() - 2);
        slot.kind = SlotKind::kOptionalExact;
      }
      auto parsed = TryParsePosTag(tag);
      if (!parsed) {
        throw SpecError("unknown item '" + std::string(item) + "' in frame '" +
                        std::string(spec) + "'");
      }
      slot.tag = *parsed;
    }
    out.slots.push_back(slot);
  }
  if (holes != 1) {
    throw SpecError("frame '" + std::string(spec) + "' has " + std::to_string(holes) +
                    " holes; exactly one is required");
  }
  return out;
}

std::string FrameSpec(const FramePattern& pattern) {
  std::string out;
  for (const FrameSlot& slot : pattern.slots) {
    if (!out.empty()) out += ' ';
    switch (slot.kind) {
      case SlotKind::kHole: out += '_'; break;
      case SlotKind::kExact: out += ToString(slot.tag); break;
      case SlotKind::kOptionalExact:
        out += '(';
        out += ToString(slot.tag);
        out += ')';
        break;
      case SlotKind::kPhrase: out += '*'; break;
      case SlotKind::kOptionalPhrase: out += "*?"; break;
    }
  }
  return out;
}

std::optional<FrameMatch> FrameMatches(const std::vector<PosTag>& sequence,
                                       std::size_t candidate,
                                       const FramePattern& frame, MatchScope scope) {
  const std::size_t n = sequence.size();
  if (candidate >= n) return std::nullopt;
  if (scope == MatchScope::kSentence) {
    if (auto a = MatchWindow(sequence, candidate, frame, 0, n)) {
      return FrameMatch{frame.id, std::move(*a)};
    }
    return std::nullopt;
  }
  for (std::size_t begin = 0; begin <= candidate; ++begin) {
    for (std::size_t end = n; end > candidate; --end) {
      if (auto a = MatchWindow(sequence, candidate, frame, begin, end)) {
        return FrameMatch{frame.id, std::move(*a)};
      }
    }
  }
  return std::nullopt;
}

std::string_view ToString(ContentClass c) {
  switch (c) {
    case ContentClass::kNoun: return "noun";
    case ContentClass::kVerb: return "verb";
    case ContentClass::kAdjective: return "adjective";
    case ContentClass::kAdverb: return "adverb";
  }
  return "?";
}

FrameSet FrameSet::BuiltIn() {
  FrameSet set;
  for (const BuiltInFrame& f : kBuiltIn) {
    set.Add(CompileFrame(f.spec, std::string(f.id)));
  }
  return set;
}

FrameSet FrameSet::Load(std::string_view text, const FrameSet& base) {
  FrameSet set = base;
  std::set<std::string> seen;
  const auto lines = internal::Split(text, '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = internal::Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "line " + std::to_string(i + 1) + ": ";
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw SpecError(where + "expected 'id: spec'");
    }
    const std::string id(internal::Trim(line.substr(0, colon)));
    if (id.empty() || id.find_first_of(" \t") != std::string::npos) {
      throw SpecError(where + "bad frame id '" + id + "'");
    }
    if (!seen.insert(id).second) {
      throw SpecError(where + "frame id '" + id + "' defined twice");
    }
    try {
      set.Add(CompileFrame(line.substr(colon + 1), id));
    } catch (const SpecError& e) {
      throw SpecError(where + e.what());
    }
  }
  return set;
}

const FramePattern* FrameSet::Find(const std::string& id) const {
  auto it = frames_.find(id);
  return it == frames_.end() ? nullptr : &it->second;
}

void FrameSet::Add(FramePattern pattern) {
  std::string id = pattern.id;
  frames_.insert_or_assign(std::move(id), std::move(pattern));
}

std::string FrameSet::Dump() const {
  std::string out;
  for (const auto& [id, pattern] : frames_) {
    out += id + ": " + FrameSpec(pattern) + "\n";
  }
  return out;
}

std::set<std::string> ClassifyInstance(const std::vector<PosTag>& sequence,
                                       std::size_t candidate, const FrameSet& set,
                                       MatchScope scope) {
  std::set<std::string> out;
  for (const auto& [id, pattern] : set.frames()) {
    if (FrameMatches(sequence, candidate, pattern, scope)) out.insert(id);
  }
  return out;
}

std::set<ContentClass> ClassifyFrameIds(const std::set<std::string>& ids) {
  auto has = [&](std::string_view id) { return ids.contains(std::string(id)); };
  auto any = [&](std::string_view prefix, int first, int last) {
    for (int k = first; k <= last; ++k) {
      if (has(std::string(prefix) + "." + std::to_string(k))) return true;
    }
    return false;
  };
  std::set<ContentClass> out;
  if (has("NN.1") && has("NN.2") && has("NN.3") && has("NN.4")) {
    out.insert(ContentClass::kNoun);
  }
  if (any("VV", 1, 5) && has("VV.6")) out.insert(ContentClass::kVerb);
  if (any("AJ", 1, 4)) out.insert(ContentClass::kAdjective);
  if (any("AV", 1, 4)) out.insert(ContentClass::kAdverb);
  return out;
}

std::set<ContentClass> ClassifyLexeme(const std::vector<Attestation>& attestations,
                                      const FrameSet& set, MatchScope scope) {
  std::set<std::string> ids;
  for (const Attestation& a : attestations) {
    ids.merge(ClassifyInstance(a.sequence, a.candidate, set, scope));
  }
  return ClassifyFrameIds(ids);
}

std::vector<PosTag> PosSequence(const Sentence& sentence) {
  std::vector<PosTag> out;
  for (const Token& t : sentence.tokens) {
    if (!t.is_space) out.push_back(t.pos);
  }
  return out;
}

std::optional<std::size_t> StrippedIndex(const Sentence& sentence, std::size_t token) {
  if (token >= sentence.tokens.size() || sentence.tokens[token].is_space) {
    return std::nullopt;
  }
  std::size_t index = 0;
  for (std::size_t t = 0; t < token; ++t) {
    if (!sentence.tokens[t].is_space) ++index;
  }
  return index;
}

}  // namespace lst20
