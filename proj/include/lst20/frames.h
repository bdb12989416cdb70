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

// Distributional test frames: POS templates with one hole, used to check
// whether the attested contexts of a word license a content-word class.
//
// Frame mini-language, whitespace-separated items:
//   _       the hole (exactly one per frame)
//   TAG     one token with that POS tag
//   (TAG)   zero or one token with that POS tag
//   *       a run of one or more tokens of any tag
//   *?      a run of zero or more tokens of any tag
//
// Matching works on POS sequences with white-space tokens already removed;
// use PosSequence() to strip them from a sentence.

#ifndef LST20_FRAMES_H_
#define LST20_FRAMES_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lst20/format.h"
#include "lst20/schema.h"

namespace lst20 {

class SpecError : public Error {
 public:
  using Error::Error;
};

enum class SlotKind { kExact, kHole, kOptionalExact, kPhrase, kOptionalPhrase };

struct FrameSlot {
  SlotKind kind = SlotKind::kHole;
  PosTag tag = PosTag::kXX;  // only meaningful for kExact and kOptionalExact

  friend bool operator==(const FrameSlot& a, const FrameSlot& b) {
    const bool tagged = a.kind == SlotKind::kExact || a.kind == SlotKind::kOptionalExact;
    return a.kind == b.kind && (!tagged || a.tag == b.tag);
  }
};

struct FramePattern {
  std::string id;
  std::vector<FrameSlot> slots;

  std::size_t hole_index() const;
  friend bool operator==(const FramePattern&, const FramePattern&) = default;
};

// Throws SpecError for zero or several holes, unknown tags, or bad items.
FramePattern CompileFrame(std::string_view spec, std::string id = "");

// Canonical spec string; CompileFrame(FrameSpec(p)) == p up to the id.
std::string FrameSpec(const FramePattern& pattern);

// kSentence: the frame must cover the whole sequence.
// kWindow: any contiguous window may match; the leftmost, then longest, wins.
enum class MatchScope { kSentence, kWindow };

struct SlotRange {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive; begin == end for an absent optional slot

  friend bool operator==(const SlotRange&, const SlotRange&) = default;
};

struct FrameMatch {
  std::string frame_id;
  std::vector<SlotRange> alignment;  // one range per slot, contiguous, in order

  friend bool operator==(const FrameMatch&, const FrameMatch&) = default;
};

// Among the alignments of a window, the witness is the one whose slot lengths
// are lexicographically greatest (earlier slots take as much as they can).
// Returns nullopt when `candidate` is out of range.
std::optional<FrameMatch> FrameMatches(const std::vector<PosTag>& sequence,
                                       std::size_t candidate,
                                       const FramePattern& frame,
                                       MatchScope scope = MatchScope::kSentence);

enum class ContentClass { kNoun, kVerb, kAdjective, kAdverb };
std::string_view ToString(ContentClass c);

class FrameSet {
 public:
  // The 18 built-in frames NN.1-4, VV.1-6, AJ.1-4, AV.1-4.
  static FrameSet BuiltIn();
  static FrameSet Empty() { return FrameSet(); }

  // Lines of `id: spec`; blank lines and `#` comments are skipped. Entries
  // replace same-id frames of `base`. Throws SpecError (message carries the
  // line number) on malformed lines or an id repeated within `text`.
  static FrameSet Load(std::string_view text, const FrameSet& base);

  const std::map<std::string, FramePattern>& frames() const { return frames_; }
  const FramePattern* Find(const std::string& id) const;
  void Add(FramePattern pattern);  // replaces a same-id frame

  // `id: spec` lines in id order; Load(Dump(), Empty()) reproduces the set.
  std::string Dump() const;

 private:
  std::map<std::string, FramePattern> frames_;
};

std::set<std::string> ClassifyInstance(const std::vector<PosTag>& sequence,
                                       std::size_t candidate, const FrameSet& set,
                                       MatchScope scope = MatchScope::kSentence);

struct Attestation {
  std::vector<PosTag> sequence;
  std::size_t candidate = 0;
};

// noun: NN.1-NN.4 all matched; verb: any of VV.1-VV.5 and VV.6;
// adjective: any AJ.n; adverb: any AV.n. Frames are unioned over attestations.
std::set<ContentClass> ClassifyFrameIds(const std::set<std::string>& ids);
std::set<ContentClass> ClassifyLexeme(const std::vector<Attestation>& attestations,
                                      const FrameSet& set,
                                      MatchScope scope = MatchScope::kSentence);

// POS tags of the non-space tokens of `sentence`. When `token` is given, it is
// mapped to its index in the stripped sequence (nullopt for a space token).
std::vector<PosTag> PosSequence(const Sentence& sentence);
std::optional<std::size_t> StrippedIndex(const Sentence& sentence, std::size_t token);

}  // namespace lst20

#endif  // LST20_FRAMES_H_
