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

#ifndef FARSI_TOOLS_CLI_HPP_
#define FARSI_TOOLS_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "farsi/conformance.hpp"
#include "farsi/normalizer.hpp"

namespace farsi::cli {

enum class Subcommand { Normalize, Tokenize, Check };

enum ExitCode : int {
  kOk = 0,
  kViolations = 1,
  kUsage = 2,
  kBadEncoding = 3,
};

struct CliConfig {
  Subcommand subcommand = Subcommand::Normalize;
  std::vector<std::string> inputs;  // empty reads the input stream
  std::optional<std::string> output;

  bool map_variants = true;
  bool remove_tatweel = true;
  bool strip_diacritics = true;
  DigitMode digits = DigitMode::Persian;
  bool fix_zwnj = true;
  bool repair_affixes = true;
  bool split_attached = false;
  bool join_dash_compounds = true;
  bool report_zwj = false;
  ReportFormat format = ReportFormat::Text;

  std::optional<std::string> table_path;
  std::optional<std::string> affixes_path;
  std::optional<std::string> known_words_path;
  std::optional<std::string> abbrev_path;
};

// Parses the command line into `config`. Returns nullopt when processing
// should go ahead, otherwise the exit code (help output goes to `out`,
// usage errors to `err`).
std::optional<int> parse_args(int argc, const char* const* argv, CliConfig& config,
                              std::ostream& out, std::ostream& err);

// Processes every input line by line. `in` is read only when the config lists
// no input paths; `out` is used unless an output path is set.
int run(const CliConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace farsi::cli

#endif  // FARSI_TOOLS_CLI_HPP_
