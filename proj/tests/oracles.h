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

// Reference implementations used only by tests. Each one is written from the
// definition, independently of the library code it checks.

#ifndef LST20_TESTS_ORACLES_H_
#define LST20_TESTS_ORACLES_H_

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lst20/format.h"
#include "lst20/frames.h"

namespace lst20::testing {

// Contents of a file under the fixture directory.
std::string ReadFixture(const std::string& name);
Document LoadFixture(const std::string& name);

// Whether an NE label sequence belongs to (O | B_x | B_x I_x* E_x)*, decided
// with std::regex over a one-letter-per-label encoding.
bool NeSequenceInLanguage(const std::vector<NeLabel>& labels);

// Maximal entity spans [begin, end) read off a well-formed label sequence:
// B_x I_x* E_x, or a lone B_x.
std::vector<std::pair<std::size_t, std::size_t>> EntitySpans(
    const std::vector<NeLabel>& labels);

// Enumerates every alignment of `frame` against a window of `sequence` and
// keeps the one the matcher contract selects: leftmost start, then longest
// window, then lexicographically greatest slot lengths.
std::optional<FrameMatch> BruteForceMatch(const std::vector<PosTag>& sequence,
                                          std::size_t candidate,
                                          const FramePattern& frame,
                                          MatchScope scope);

// Whitespace-separated POS tags.
std::vector<PosTag> Tags(std::string_view spec);

struct FrameCase {
  std::string name;
  std::string words;  // the sentence, for failure messages
  std::string tags;
  std::size_t candidate;
  std::string frame;  // the frame the instance illustrates
};

// Worked instances of the noun, verb, adjective and adverb test frames.
const std::vector<FrameCase>& WorkedFrameCases();

struct RandomDocOptions {
  std::size_t max_sentences = 50;
  std::size_t max_tokens = 40;
};

// A document that passes LintDocument with no errors: well-formed NE and
// clause sequences, white space tagged PU, surfaces writable in both formats.
Document RandomValidDocument(std::mt19937& rng, const RandomDocOptions& options = {});

}  // namespace lst20::testing

#endif  // LST20_TESTS_ORACLES_H_
