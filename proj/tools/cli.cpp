// Copyright 2026 The farsi-std Authors.
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string_view>

#include "farsi/error.hpp"
#include "farsi/pipeline.hpp"
#include "farsi/utf8.hpp"

namespace farsi::cli {
namespace {

constexpr std::string_view kBomBytes = "\xEF\xBB\xBF";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Loader>
auto load_file(const std::string& path, const char* what, Loader loader) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + std::string(what) + " " + path);
  try {
    return loader(in);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

PipelineConfig build_pipeline(const CliConfig& config) {
  PipelineConfig p;
  NormalizationConfig& n = p.normalization;
  n.map_variants = config.map_variants;
  n.remove_tatweel = config.remove_tatweel;
  n.strip_diacritics = config.strip_diacritics;
  n.unify_digits = config.digits;
  n.fix_zwnj = config.fix_zwnj;
  if (config.table_path) {
    n.mapping = load_file(*config.table_path, "mapping table", [&](std::istream& in) {
      return load_mapping_table(in, *config.table_path);
    });
  }
  p.tokenizer.set_join_dash_compounds(config.join_dash_compounds);
  if (config.abbrev_path) {
    load_file(*config.abbrev_path, "abbreviation list", [&](std::istream& in) {
      p.tokenizer.add_abbreviations(in);
      return 0;
    });
  }
  p.repair_affixes = config.repair_affixes;
  p.split_attached = config.split_attached;
  if (config.affixes_path) {
    p.lexicon = load_file(*config.affixes_path, "affix lexicon",
                          [](std::istream& in) { return load_affix_lexicon(in); });
  }
  if (config.known_words_path) {
    p.known_words = load_file(*config.known_words_path, "word list",
                              [](std::istream& in) { return load_word_list(in); });
  }
  return p;
}

// Per-stream state of one subcommand. Offsets are code points from the start
// of the stream, a BOM excluded.
class Processor {
 public:
  Processor(const CliConfig& config, const PipelineConfig& pipeline, std::ostream& out)
      : config_(config), pipeline_(pipeline), out_(out) {}

  void begin(bool bom) {
    offset_ = 0;
    report_ = Report{};
    if (bom && config_.subcommand == Subcommand::Normalize) out_ << kBomBytes;
  }

  void line(std::u32string_view text, bool newline) {
    switch (config_.subcommand) {
      case Subcommand::Normalize:
        buffer_.clear();
        for (char32_t cp : standardize(text, pipeline_)) utf8::append(buffer_, cp);
        if (newline) buffer_.push_back('\n');
        out_.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
        break;
      case Subcommand::Tokenize: {
        const StandardizedTokens result = standardize_tokens(text, pipeline_);
        // Offsets index the standardized output stream.
        std::size_t shift = 0;
        for (const Token& t : result.tokens) {
          const std::size_t start = t.span.start + shift;
          shift += t.text.size() - t.span.size();
          out_ << to_string(t.kind) << '\t' << offset_ + start << '\t'
               << offset_ + t.span.end + shift << '\t' << utf8::encode(t.text) << '\n';
        }
        offset_ += result.normalized.size() + shift + (newline ? 1 : 0);
        break;
      }
      case Subcommand::Check:
        report_.append(check(text, pipeline_, CheckOptions{config_.report_zwj}), offset_);
        offset_ += text.size();
        if (newline) {
          ++offset_;
          ++report_.total_code_points;
        }
        break;
    }
  }

  // Returns whether the stream had violations.
  bool end() {
    if (config_.subcommand != Subcommand::Check) return false;
    out_ << render_report(report_, config_.format);
    return !report_.empty();
  }

 private:
  const CliConfig& config_;
  const PipelineConfig& pipeline_;
  std::ostream& out_;
  std::size_t offset_ = 0;
  Report report_;
  std::string buffer_;
};

// Streams `in` through `processor`. Throws utf8::DecodeError with the byte
// offset into the whole stream.
bool process_stream(std::istream& in, Processor& processor) {
  std::string line;
  std::size_t byte_offset = 0;
  bool first = true;
  while (std::getline(in, line)) {
    const bool newline = !in.eof();
    std::string_view bytes = line;
    if (first) {
      const bool bom = bytes.substr(0, kBomBytes.size()) == kBomBytes;
      if (bom) {
        bytes.remove_prefix(kBomBytes.size());
        byte_offset += kBomBytes.size();
      }
      processor.begin(bom);
      first = false;
    }
    std::u32string text;
    try {
      text = utf8::decode(bytes);
    } catch (const utf8::DecodeError& e) {
      throw utf8::DecodeError(byte_offset + e.byte_offset());
    }
    processor.line(text, newline);
    byte_offset += bytes.size() + (newline ? 1 : 0);
  }
  if (first) processor.begin(false);
  return processor.end();
}

}  // namespace

std::optional<int> parse_args(int argc, const char* const* argv, CliConfig& config,
                              std::ostream& out, std::ostream& err) {
  CLI::App app{"Standardizes Farsi text: character set, ZWNJ and affix spacing."};
  app.require_subcommand(1, 1);

  std::vector<CLI::App*> commands = {
      app.add_subcommand("normalize", "Write the standardized text"),
      app.add_subcommand("tokenize", "Write one token per line: KIND, START, END, TEXT"),
      app.add_subcommand("check", "Report deviations from the standard with fixes"),
  };
  bool no_map = false, keep_tatweel = false, keep_diacritics = false,
       no_fix_zwnj = false, repair = false, no_repair = false, no_join_dashes = false;
  std::string digits = "persian", format = "text";
  for (CLI::App* sub : commands) {
    sub->add_flag("--no-map-variants", no_map, "Keep Arabic letter variants");
    sub->add_flag("--keep-tatweel", keep_tatweel, "Keep TATWEEL");
    sub->add_flag("--keep-diacritics", keep_diacritics, "Keep short vowels and other marks");
    sub->add_option("--digits", digits, "Digit handling")
        ->check(CLI::IsMember({"persian", "preserve"}));
    sub->add_flag("--no-fix-zwnj", no_fix_zwnj, "Leave ZWNJ placement alone");
    sub->add_flag("--repair-affixes", repair, "Join space-separated affixes (default)");
    sub->add_flag("--no-repair-affixes", no_repair, "Do not join space-separated affixes");
    sub->add_flag("--split-attached", config.split_attached,
                  "Insert ZWNJ between known stems and attached suffixes");
    sub->add_flag("--no-join-dashes", no_join_dashes,
                  "Do not treat dashes between letters as word-internal");
    sub->add_option("--table", config.table_path, "Character mapping table");
    sub->add_option("--affixes", config.affixes_path, "Affix lexicon");
    sub->add_option("--known-words", config.known_words_path, "Stem list for --split-attached");
    sub->add_option("--abbrev", config.abbrev_path, "Abbreviation list");
    sub->add_option("--output,-o", config.output, "Output file (default: stdout)");
    sub->add_option("inputs", config.inputs, "Input files (default: stdin)");
  }
  commands[2]->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  commands[2]->add_flag("--report-zwj", config.report_zwj, "Also report ZWJ (no fix)");

  try {
    app.parse(argc, argv);
    if (repair && no_repair) {
      throw CLI::ValidationError("--repair-affixes and --no-repair-affixes are exclusive");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  config.subcommand = commands[0]->parsed()   ? Subcommand::Normalize
                      : commands[1]->parsed() ? Subcommand::Tokenize
                                              : Subcommand::Check;
  config.map_variants = !no_map;
  config.remove_tatweel = !keep_tatweel;
  config.strip_diacritics = !keep_diacritics;
  config.digits = digits == "preserve" ? DigitMode::Preserve : DigitMode::Persian;
  config.fix_zwnj = !no_fix_zwnj;
  config.repair_affixes = !no_repair;
  config.join_dash_compounds = !no_join_dashes;
  config.format = format == "json" ? ReportFormat::Json : ReportFormat::Text;
  return std::nullopt;
}

int run(const CliConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err) {
  PipelineConfig pipeline;
  std::ofstream file_out;
  try {
    pipeline = build_pipeline(config);
    if (config.output) {
      file_out.open(*config.output, std::ios::binary);
      if (!file_out) throw UsageError("cannot open output " + *config.output);
    }
  } catch (const UsageError& e) {
    err << "farsi-std: " << e.what() << '\n';
    return kUsage;
  }
  std::ostream& sink = config.output ? file_out : out;
  Processor processor(config, pipeline, sink);

  bool violations = false;
  const auto process = [&](std::istream& stream, const std::string& name) -> int {
    try {
      violations = process_stream(stream, processor) || violations;
    } catch (const utf8::DecodeError& e) {
      sink.flush();
      err << "farsi-std: " << name << ": invalid UTF-8 at byte offset " << e.byte_offset()
          << '\n';
      return kBadEncoding;
    }
    return kOk;
  };

  if (config.inputs.empty()) {
    if (const int code = process(in, "<stdin>"); code != kOk) return code;
  }
  for (const std::string& path : config.inputs) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
      err << "farsi-std: cannot open input " << path << '\n';
      return kUsage;
    }
    if (const int code = process(stream, path); code != kOk) return code;
  }
  sink.flush();
  if (!sink) {
    err << "farsi-std: write failed\n";
    return kUsage;
  }
  return violations ? kViolations : kOk;
}

}  // namespace farsi::cli
