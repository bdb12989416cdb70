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

// Corpus-level counts and histograms.

#ifndef LST20_STATS_H_
#define LST20_STATS_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "lst20/format.h"

namespace lst20 {

struct CorpusCounts {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::size_t clauses = 0;         // B_CLS labels
  std::size_t named_entities = 0;  // NE labels with prefix B
  std::size_t words = 0;           // non-space tokens, unless spaces are included
  std::size_t tokens = 0;

  CorpusCounts& operator+=(const CorpusCounts& other);
  friend bool operator==(const CorpusCounts&, const CorpusCounts&) = default;
};

struct StatsOptions {
  bool include_spaces = false;  // count white-space tokens as words
};

// Bins with a zero count are never present.
using Histogram = std::map<std::string, std::size_t>;

CorpusCounts CountDocument(const Document& doc, const StatsOptions& options = {});
CorpusCounts CountCorpus(const Corpus& corpus, const StatsOptions& options = {});

inline constexpr std::string_view kUnknownGenre = "unknown";

// Documents per genre; documents without one fall under kUnknownGenre.
Histogram GenreHistogram(const Corpus& corpus);

// `<document-id>\t<genre>` per line; blank lines and `#` comments skipped.
// Throws Error with the line number on malformed lines or repeated ids.
std::map<std::string, std::string> LoadManifest(std::string_view text);

// Sets the genre of every document listed in `manifest`.
void ApplyManifest(const std::map<std::string, std::string>& manifest, Corpus& corpus);

enum class TagLayer { kPos, kNeCategory };

// kPos counts every token (spaces are PU) unless options exclude spaces;
// kNeCategory counts one per entity, i.e. per B_ label.
Histogram TagFrequency(const Corpus& corpus, TagLayer layer,
                       const StatsOptions& options = {.include_spaces = true});

}  // namespace lst20

#endif  // LST20_STATS_H_
