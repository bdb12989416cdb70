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

// The `lst20` command-line front end, as a library so tests can drive it.

#ifndef LST20_TOOLS_CLI_H_
#define LST20_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lst20/validate.h"

namespace lst20::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // lint errors or failed conversion
inline constexpr int kExitUsage = 2;    // usage, I/O or configuration error

enum class ReportMode { kText, kJson };

struct FileReport {
  std::string file;
  LintReport report;
};

// Text: one line per issue, then "N errors, M warnings". JSON: an array of
// {file, severity, code, message, sentence, token, layer}; `file` is omitted
// when empty. Positions are 0-based in both modes.
std::string FormatReport(const LintReport& report, ReportMode mode,
                         std::string_view file = "");
std::string FormatReports(const std::vector<FileReport>& reports, ReportMode mode);

// `args` excludes the program name. Data goes to `out` (or the -o file),
// diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lst20::cli

#endif  // LST20_TOOLS_CLI_H_
