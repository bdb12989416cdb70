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

// Small UTF-8 and string helpers shared by the readers and the linter.

#ifndef LST20_SRC_TEXT_UTIL_H_
#define LST20_SRC_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace lst20::internal {

// Strips ASCII white space (space, tab, CR, LF, VT, FF) from both ends.
std::string_view Trim(std::string_view s);

// Splits on every occurrence of `sep`; empty pieces are kept.
std::vector<std::string_view> Split(std::string_view s, char sep);

bool IsValidUtf8(std::string_view s);

// Decodes valid UTF-8. Invalid bytes decode as U+FFFD.
std::u32string DecodeUtf8(std::string_view s);

// Thai block, U+0E00..U+0E7F.
bool IsThai(char32_t c);

// Unicode white space other than the line terminators.
bool IsUnicodeSpace(char32_t c);

// ASCII punctuation plus the common non-Thai Unicode marks (quotes, dashes,
// ellipsis, guillemets, CJK full stops).
bool IsNonThaiPunctuation(char32_t c);

}  // namespace lst20::internal

#endif  // LST20_SRC_TEXT_UTIL_H_
