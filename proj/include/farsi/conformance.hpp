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

#ifndef FARSI_CONFORMANCE_HPP_
#define FARSI_CONFORMANCE_HPP_

// Conformance checking: locates every deviation of a text from its canonical
// form and attaches a machine-applicable fix to each. Applying all fixes of a
// report in span order yields exactly standardize() of the checked text.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "farsi/pipeline.hpp"
#include "farsi/tokenizer.hpp"

namespace farsi {

enum class ViolationKind {
  NonStandardLetter,  // variant letter or presentation form (mapping stage)
  Tatweel,
  ShortVowel,         // any stripped diacritic
  ArabicIndicDigit,
  ZwnjMisuse,         // redundant, doubled or space-adjacent ZWNJ
  SpaceJoinedAffix,   // affix separated from its stem by a space
  AttachedAffix,      // suffix glued to a known stem without ZWNJ
  ZwjPresent,         // report-only
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind = ViolationKind::NonStandardLetter;
  // Code point offsets into the checked text. Zero-width spans are
  // insertions.
  Span span;
  std::u32string found;
  // Absent for report-only findings.
  std::optional<std::u32string> suggested;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Report {
  std::vector<Violation> violations;  // sorted by span
  std::map<ViolationKind, std::size_t> counts;
  std::size_t total_code_points = 0;

  bool empty() const noexcept { return violations.empty(); }
  void add(Violation violation);
  // Appends the violations of `other` shifted by `offset` code points.
  void append(const Report& other, std::size_t offset);
};

struct CheckOptions {
  // ZWJ has no canonical replacement; reporting it is opt-in.
  bool report_zwj = false;
};

Report check(std::u32string_view text, const PipelineConfig& config,
             CheckOptions options = {});

// Affix repair enabled, default tokenizer, no attached-suffix splitting.
Report check(std::u32string_view text, const NormalizationConfig& config,
             const AffixLexicon& lexicon);

// Applies every fix of `report` to `text`. Report-only findings are skipped.
// Throws std::invalid_argument when violations overlap or fall outside
// `text`.
std::u32string apply_fixes(std::u32string_view text, const Report& report);

enum class ReportFormat { Text, Json };

std::string render_report(const Report& report, ReportFormat format);

}  // namespace farsi

#endif  // FARSI_CONFORMANCE_HPP_
