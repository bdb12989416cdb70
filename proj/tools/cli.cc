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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lst20/format.h"
#include "lst20/frames.h"
#include "lst20/segment.h"
#include "lst20/stats.h"

namespace lst20::cli {

namespace fs = std::filesystem;

namespace {

// Raised for exit code 2 conditions.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Extensions picked up when a directory is given as input.
const std::set<std::string> kCorpusExtensions = {".txt", ".inline", ".conll", ".tsv"};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Directories expand to their corpus files, recursively, in lexicographic
// path order. Explicit file arguments keep their order.
std::vector<fs::path> ExpandInputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> out;
  for (const std::string& input : inputs) {
    const fs::path path(input);
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::recursive_directory_iterator(path)) {
        if (entry.is_regular_file() &&
            kCorpusExtensions.contains(entry.path().extension().string())) {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(path, ec)) {
      out.push_back(path);
    } else {
      throw UsageError("no such file or directory: " + input);
    }
  }
  return out;
}

TextFormat FormatOf(const fs::path& path, const std::string& flag) {
  if (!flag.empty()) return *ParseTextFormat(flag);
  return path.extension() == ".inline" ? TextFormat::kInline : TextFormat::kColumnar;
}

bool SamePath(const fs::path& a, const fs::path& b) {
  std::error_code ec;
  if (fs::exists(a, ec) && fs::exists(b, ec)) return fs::equivalent(a, b, ec);
  return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

// Writes `data` to `output` or, when empty, to `out`.
void Emit(const std::string& data, const std::string& output,
          const std::vector<fs::path>& inputs, std::ostream& out) {
  if (output.empty() || output == "-") {
    out << data;
    return;
  }
  for (const fs::path& input : inputs) {
    if (SamePath(input, output)) {
      throw UsageError("refusing to overwrite input file " + input.string());
    }
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw UsageError("cannot write " + output);
  file << data;
}

Document LoadDocument(const fs::path& path, const std::string& from, ParseMode mode) {
  ColumnarResult r = ReadDocument(FormatOf(path, from), ReadFile(path),
                                  path.stem().string(), mode);
  if (!r.errors.empty()) throw FormatException(r.errors.front());
  return std::move(r.document);
}

const std::map<std::string, SubjectShift> kSubjectShift = {
    {"always", SubjectShift::kAlwaysSplit},
    {"never", SubjectShift::kNeverSplit},
    {"heuristic", SubjectShift::kSurfaceHeuristic}};

std::string Plural(std::size_t n, std::string_view word) {
  return std::to_string(n) + " " + std::string(word) + (n == 1 ? "" : "s");
}

nlohmann::ordered_json HistogramJson(const Histogram& h) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : h) j[k] = v;
  return j;
}

void AppendHistogram(std::ostringstream& os, std::string_view title, const Histogram& h) {
  os << title << "\n";
  for (const auto& [k, v] : h) os << "  " << k << "\t" << v << "\n";
}

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string from;
  std::string to;
  bool strict = false;
  bool json = false;
  bool excerpt = false;
  bool keep_clauses = false;
  bool include_spaces = false;
  bool window = false;
  int layers = 4;
  std::string lexicon;
  std::string frames;
  std::string manifest;
  std::string subject_shift = "heuristic";
};

int RunValidate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto paths = ExpandInputs(o.inputs);
  std::vector<FileReport> reports;
  for (const fs::path& path : paths) {
    FileReport fr{path.string(), {}};
    const std::string text = ReadFile(path);
    const ParseMode mode = o.strict ? ParseMode::kStrict : ParseMode::kPermissive;
    try {
      ColumnarResult r = ReadDocument(FormatOf(path, o.from), text,
                                      path.stem().string(), mode);
      for (const FormatError& e : r.errors) fr.report.Add(IssueFromFormatError(e));
      LintReport lint = LintDocument(r.document, LintOptions{.excerpt = o.excerpt});
      fr.report.Append(lint.issues());
    } catch (const FormatException& e) {
      fr.report.Add(IssueFromFormatError(e.error()));
    }
    fr.report.Sort();
    reports.push_back(std::move(fr));
  }
  Emit(FormatReports(reports, o.json ? ReportMode::kJson : ReportMode::kText),
       o.output, paths, out);
  std::size_t errors = 0;
  for (const FileReport& r : reports) errors += r.report.errors();
  if (errors > 0) err << Plural(errors, "error") << " found\n";
  return errors > 0 ? kExitFailure : kExitOk;
}

int RunConvert(const Options& o, std::ostream& out, std::ostream& err) {
  const auto paths = ExpandInputs(o.inputs);
  if (paths.size() != 1) throw UsageError("convert takes exactly one input file");
  const fs::path& path = paths.front();
  const TextFormat from = FormatOf(path, o.from);
  const TextFormat to = o.to.empty()
                            ? (from == TextFormat::kColumnar ? TextFormat::kInline
                                                             : TextFormat::kColumnar)
                            : *ParseTextFormat(o.to);
  std::string data;
  try {
    data = Convert(from, to, ReadFile(path),
                   ConvertOptions{.layers = o.layers, .id = path.stem().string()});
  } catch (const FormatException& e) {
    err << path.string() << ": " << e.error().Describe() << "\n";
    return kExitFailure;
  } catch (const WriteError& e) {
    err << path.string() << ": " << e.what() << "\n";
    return kExitFailure;
  }
  Emit(data, o.output, paths, out);
  return kExitOk;
}

MarkerLexicon LoadLexicon(const Options& o) {
  if (o.lexicon.empty()) return MarkerLexicon::Default();
  try {
    return LoadMarkerLexicon(ReadFile(o.lexicon));
  } catch (const ConfigError& e) {
    throw UsageError(o.lexicon + ": " + e.what());
  }
}

int RunSegment(const Options& o, std::ostream& out, std::ostream& err) {
  const auto paths = ExpandInputs(o.inputs);
  if (paths.size() != 1) throw UsageError("segment takes exactly one input file");
  const fs::path& path = paths.front();
  const MarkerLexicon lexicon = LoadLexicon(o);
  SegmenterConfig config;
  config.subject_shift = kSubjectShift.at(o.subject_shift);

  Document doc;
  try {
    doc = LoadDocument(path, o.from, ParseMode::kStrict);
  } catch (const FormatException& e) {
    err << path.string() << ": " << e.error().Describe() << "\n";
    return kExitFailure;
  }
  const Document result = o.keep_clauses ? AggregateDocument(doc, lexicon, config)
                                         : SegmentDocument(doc, lexicon, config);
  const TextFormat to = o.to.empty() ? FormatOf(path, o.from) : *ParseTextFormat(o.to);
  std::string data;
  try {
    data = EmitSentenceMarkers(result.sentences, to);
  } catch (const WriteError& e) {
    err << path.string() << ": " << e.what() << "\n";
    return kExitFailure;
  }
  Emit(data, o.output, paths, out);
  return kExitOk;
}

int RunStats(const Options& o, std::ostream& out, std::ostream& err) {
  const auto paths = ExpandInputs(o.inputs);
  std::map<std::string, std::string> manifest;
  if (!o.manifest.empty()) {
    try {
      manifest = LoadManifest(ReadFile(o.manifest));
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(o.manifest + ": " + e.what());
    }
  }
  Corpus corpus;
  for (const fs::path& path : paths) {
    try {
      Document doc = LoadDocument(path, o.from, ParseMode::kStrict);
      // The manifest may name a document by file name or by stem.
      if (auto it = manifest.find(path.filename().string()); it != manifest.end()) {
        doc.genre = it->second;
      }
      corpus.documents.push_back(std::move(doc));
    } catch (const FormatException& e) {
      err << path.string() << ": " << e.error().Describe() << "\n";
      return kExitFailure;
    }
  }
  ApplyManifest(manifest, corpus);

  const StatsOptions options{.include_spaces = o.include_spaces};
  const CorpusCounts c = CountCorpus(corpus, options);
  const Histogram genres = GenreHistogram(corpus);
  const Histogram pos = TagFrequency(corpus, TagLayer::kPos, options);
  const Histogram ne = TagFrequency(corpus, TagLayer::kNeCategory);

  std::string data;
  if (o.json) {
    nlohmann::ordered_json j;
    j["documents"] = c.documents;
    j["sentences"] = c.sentences;
    j["clauses"] = c.clauses;
    j["named_entities"] = c.named_entities;
    j["words"] = c.words;
    j["tokens"] = c.tokens;
    j["genres"] = HistogramJson(genres);
    j["pos"] = HistogramJson(pos);
    j["ne"] = HistogramJson(ne);
    data = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "documents\t" << c.documents << "\n"
       << "sentences\t" << c.sentences << "\n"
       << "clauses\t" << c.clauses << "\n"
       << "named_entities\t" << c.named_entities << "\n"
       << "words\t" << c.words << "\n"
       << "tokens\t" << c.tokens << "\n";
    AppendHistogram(os, "genres", genres);
    AppendHistogram(os, "pos", pos);
    AppendHistogram(os, "ne", ne);
    data = os.str();
  }
  Emit(data, o.output, paths, out);
  return kExitOk;
}

FrameSet LoadFrames(const Options& o) {
  if (o.frames.empty()) return FrameSet::BuiltIn();
  try {
    return FrameSet::Load(ReadFile(o.frames), FrameSet::BuiltIn());
  } catch (const SpecError& e) {
    throw UsageError(o.frames + ": " + e.what());
  }
}

int RunFramesDump(const Options& o, std::ostream& out) {
  Emit(LoadFrames(o).Dump(), o.output, {}, out);
  return kExitOk;
}

std::optional<ContentClass> ClassOfTag(PosTag tag) {
  switch (tag) {
    case PosTag::kNN: return ContentClass::kNoun;
    case PosTag::kVV: return ContentClass::kVerb;
    case PosTag::kAJ: return ContentClass::kAdjective;
    case PosTag::kAV: return ContentClass::kAdverb;
    default: return std::nullopt;
  }
}

// One line per (surface, tag) of a content word: the classes its attested
// contexts license, and whether the assigned tag is among them.
int RunFramesCheck(const Options& o, std::ostream& out, std::ostream& err) {
  const FrameSet frames = LoadFrames(o);
  const auto paths = ExpandInputs(o.inputs);
  const MatchScope scope = o.window ? MatchScope::kWindow : MatchScope::kSentence;
  std::map<std::pair<std::string, PosTag>, std::vector<Attestation>> lexemes;
  for (const fs::path& path : paths) {
    Document doc;
    try {
      doc = LoadDocument(path, o.from, ParseMode::kStrict);
    } catch (const FormatException& e) {
      err << path.string() << ": " << e.error().Describe() << "\n";
      return kExitFailure;
    }
    for (const Sentence& s : doc.sentences) {
      const std::vector<PosTag> seq = PosSequence(s);
      for (std::size_t t = 0; t < s.tokens.size(); ++t) {
        const Token& token = s.tokens[t];
        if (token.is_space || !ClassOfTag(token.pos)) continue;
        lexemes[{token.surface, token.pos}].push_back({seq, *StrippedIndex(s, t)});
      }
    }
  }
  std::ostringstream os;
  std::size_t licensed = 0;
  for (const auto& [key, attestations] : lexemes) {
    const std::set<ContentClass> classes = ClassifyLexeme(attestations, frames, scope);
    const bool ok = classes.contains(*ClassOfTag(key.second));
    licensed += ok ? 1 : 0;
    std::string names;
    for (ContentClass c : classes) {
      if (!names.empty()) names += ',';
      names += ToString(c);
    }
    os << key.first << "\t" << ToString(key.second) << "\t"
       << (names.empty() ? "-" : names) << "\t" << (ok ? "licensed" : "unlicensed")
       << "\n";
  }
  os << licensed << " of " << lexemes.size() << " content words licensed\n";
  Emit(os.str(), o.output, paths, out);
  return kExitOk;
}

}  // namespace

std::string FormatReport(const LintReport& report, ReportMode mode,
                         std::string_view file) {
  return FormatReports({FileReport{std::string(file), report}}, mode);
}

std::string FormatReports(const std::vector<FileReport>& reports, ReportMode mode) {
  if (mode == ReportMode::kJson) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const FileReport& r : reports) {
      for (const LintIssue& issue : r.report.issues()) {
        nlohmann::ordered_json item;
        if (!r.file.empty()) item["file"] = r.file;
        item["severity"] = ToString(issue.severity);
        item["code"] = issue.code;
        item["message"] = issue.message;
        item["sentence"] = issue.sentence;
        item["token"] = issue.token;
        item["layer"] = ToString(issue.layer);
        j.push_back(std::move(item));
      }
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  std::size_t errors = 0;
  std::size_t warnings = 0;
  for (const FileReport& r : reports) {
    for (const LintIssue& issue : r.report.issues()) {
      if (!r.file.empty()) os << r.file << ": ";
      os << "sentence " << issue.sentence << " token " << issue.token << ": "
         << ToString(issue.severity) << " " << issue.code << " " << issue.message
         << "\n";
    }
    errors += r.report.errors();
    warnings += r.report.warnings();
  }
  os << Plural(errors, "error") << ", " << Plural(warnings, "warning") << "\n";
  return os.str();
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tools for LST20-style annotated Thai corpora", "lst20"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  Options o;

  const std::vector<std::string> formats = {"columnar", "inline"};
  auto add_from = [&](CLI::App* cmd) {
    cmd->add_option("--from", o.from, "Input format (default: by file extension)")
        ->check(CLI::IsMember(formats));
  };
  auto add_inputs = [&](CLI::App* cmd) {
    cmd->add_option("inputs", o.inputs, "Input files or directories")->required();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", o.output, "Output file (default: stdout)");
  };

  CLI::App* validate = app.add_subcommand("validate", "Lint annotation files");
  add_inputs(validate);
  add_from(validate);
  add_output(validate);
  validate->add_flag("--strict", o.strict, "Stop reading a file at its first format error");
  validate->add_flag("--json", o.json, "Emit the report as JSON");
  validate->add_flag("--excerpt", o.excerpt,
                     "Input is a window of a larger file; spans may be open at its edges");

  CLI::App* convert = app.add_subcommand("convert", "Convert between columnar and inline");
  add_inputs(convert);
  add_from(convert);
  add_output(convert);
  convert->add_option("--to", o.to, "Output format")->check(CLI::IsMember(formats));
  convert->add_option("--layers", o.layers, "Inline layers to write")
      ->check(CLI::Range(2, 4));

  CLI::App* segment = app.add_subcommand("segment", "Detect clauses and sentences");
  add_inputs(segment);
  add_from(segment);
  add_output(segment);
  segment->add_option("--to", o.to, "Output format")->check(CLI::IsMember(formats));
  segment->add_option("--lexicon", o.lexicon, "Marker lexicon file");
  segment->add_option("--subject-shift", o.subject_shift, "Subject-shift policy")
      ->check(CLI::IsMember({"always", "never", "heuristic"}));
  segment->add_flag("--keep-clauses", o.keep_clauses,
                    "Use the existing clause labels; only regroup sentences");

  CLI::App* stats = app.add_subcommand("stats", "Corpus counts and histograms");
  add_inputs(stats);
  add_from(stats);
  add_output(stats);
  stats->add_flag("--json", o.json, "Emit JSON");
  stats->add_option("--manifest", o.manifest, "Genre manifest (<document>\\t<genre>)");
  stats->add_flag("--include-spaces", o.include_spaces,
                  "Count white-space tokens as words and POS occurrences");

  CLI::App* frames = app.add_subcommand("frames", "Distributional test frames");
  frames->require_subcommand(1);
  CLI::App* check = frames->add_subcommand("check", "Check content-word tags against frames");
  add_inputs(check);
  add_from(check);
  add_output(check);
  check->add_option("--frames", o.frames, "Frame definition file");
  check->add_flag("--window", o.window, "Match frames against any window");
  CLI::App* dump = frames->add_subcommand("dump", "Print the frame set");
  add_output(dump);
  dump->add_option("--frames", o.frames, "Frame definition file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return RunValidate(o, out, err);
    if (convert->parsed()) return RunConvert(o, out, err);
    if (segment->parsed()) return RunSegment(o, out, err);
    if (stats->parsed()) return RunStats(o, out, err);
    if (check->parsed()) return RunFramesCheck(o, out, err);
    if (dump->parsed()) return RunFramesDump(o, out);
  } catch (const UsageError& e) {
    err << "lst20: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "lst20: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace lst20::cli
