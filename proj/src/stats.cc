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

#include "lst20/stats.h"

#include "text_util.h"

namespace lst20 {

CorpusCounts& CorpusCounts::operator+=(const CorpusCounts& other) {
  documents += other.documents;
  sentences += other.sentences;
  clauses += other.clauses;
  named_entities += other.named_entities;
  words += other.words;
  tokens += other.tokens;
  return *this;
}

CorpusCounts CountDocument(const Document& doc, const StatsOptions& options) {
  CorpusCounts c;
  c.documents = 1;
  c.sentences = doc.sentences.size();
  for (const Sentence& s : doc.sentences) {
    for (const Token& t : s.tokens) {
      ++c.tokens;
      if (!t.is_space || options.include_spaces) ++c.words;
      if (t.clause == ClauseLabel::kB) ++c.clauses;
      if (t.ne.prefix() == BoundaryPrefix::kB) ++c.named_entities;
    }
  }
  return c;
}

CorpusCounts CountCorpus(const Corpus& corpus, const StatsOptions& options) {
  CorpusCounts total;
  for (const Document& doc : corpus.documents) total += CountDocument(doc, options);
  return total;
}

Histogram GenreHistogram(const Corpus& corpus) {
  Histogram h;
  for (const Document& doc : corpus.documents) {
    ++h[doc.genre.value_or(std::string(kUnknownGenre))];
  }
  return h;
}

std::map<std::string, std::string> LoadManifest(std::string_view text) {
  std::map<std::string, std::string> out;
  const auto lines = internal::Split(text, '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = internal::Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "manifest line " + std::to_string(i + 1) + ": ";
    const auto fields = internal::Split(line, '\t');
    if (fields.size() != 2) throw Error(where + "expected '<id>\\t<genre>'");
    const std::string id(internal::Trim(fields[0]));
    const std::string genre(internal::Trim(fields[1]));
    if (id.empty() || genre.empty()) throw Error(where + "empty id or genre");
    if (!out.emplace(id, genre).second) {
      throw Error(where + "document '" + id + "' listed twice");
    }
  }
  return out;
}

void ApplyManifest(const std::map<std::string, std::string>& manifest, Corpus& corpus) {
  for (Document& doc : corpus.documents) {
    if (auto it = manifest.find(doc.id); it != manifest.end()) doc.genre = it->second;
  }
}

Histogram TagFrequency(const Corpus& corpus, TagLayer layer,
                       const StatsOptions& options) {
  Histogram h;
  for (const Document& doc : corpus.documents) {
    for (const Sentence& s : doc.sentences) {
      for (const Token& t : s.tokens) {
        if (layer == TagLayer::kPos) {
          if (!t.is_space || options.include_spaces) ++h[std::string(ToString(t.pos))];
        } else if (t.ne.prefix() == BoundaryPrefix::kB) {
          ++h[std::string(ToString(*t.ne.category()))];
        }
      }
    }
  }
  return h;
}

}  // namespace lst20
