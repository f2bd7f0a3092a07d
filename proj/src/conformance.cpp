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

#include "farsi/conformance.hpp"

#include <algorithm>
#include <stdexcept>

#include "char_rewrite.hpp"
#include "farsi/utf8.hpp"
#include "json.hpp"

namespace farsi {
namespace {

using internal::Stage;

// The checked text after the character-level stages. Cell i holds what
// code point i of the input became; cells are laid out contiguously in
// `normalized`, in input order.
struct CellMap {
  std::u32string normalized;
  std::vector<std::size_t> start;  // size n + 1
  std::vector<Stage> stage;

  std::size_t cell_of(std::size_t pos) const {
    const auto it = std::upper_bound(start.begin(), start.end(), pos);
    return static_cast<std::size_t>(it - start.begin()) - 1;
  }
};

CellMap build_cells(std::u32string_view text, const NormalizationConfig& config) {
  const std::size_t n = text.size();
  std::u32string rewritten;
  rewritten.reserve(n);
  std::vector<std::size_t> rewritten_start(n + 1);
  CellMap cells;
  cells.stage.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rewritten_start[i] = rewritten.size();
    cells.stage[i] = internal::rewrite_char(text[i], config, rewritten);
  }
  rewritten_start[n] = rewritten.size();

  std::vector<std::size_t> drop;
  if (config.fix_zwnj) drop = redundant_zwnj_positions(rewritten);
  cells.start.resize(n + 1);
  cells.normalized.reserve(rewritten.size());
  std::size_t d = 0;
  for (std::size_t i = 0; i < n; ++i) {
    cells.start[i] = cells.normalized.size();
    for (std::size_t k = rewritten_start[i]; k < rewritten_start[i + 1]; ++k) {
      if (d < drop.size() && drop[d] == k) {
        ++d;
        if (cells.stage[i] == Stage::None) cells.stage[i] = Stage::Zwnj;
        continue;
      }
      cells.normalized.push_back(rewritten[k]);
    }
  }
  cells.start[n] = cells.normalized.size();
  return cells;
}

// A rewrite of normalized[a, b); a == b is an insertion before position a.
struct Edit {
  std::size_t a = 0;
  std::size_t b = 0;
  std::u32string replacement;
  ViolationKind kind = ViolationKind::SpaceJoinedAffix;
};

class StructuralPlanner {
 public:
  StructuralPlanner(const CellMap& cells, std::u32string_view text,
                    const PipelineConfig& config, const CheckOptions& options)
      : cells_(cells), text_(text), config_(config), options_(options) {}

  std::vector<Edit> plan() const {
    std::vector<Edit> edits;
    const std::u32string_view normalized = cells_.normalized;
    std::vector<Token> tokens = tokenize(normalized, config_.tokenizer);
    std::vector<std::optional<std::size_t>> split_at(tokens.size());
    if (config_.split_attached) {
      for (std::size_t k = 0; k < tokens.size(); ++k) {
        split_at[k] = attached_split_point(tokens[k], config_.lexicon,
                                           config_.known_words);
        if (split_at[k]) {
          tokens[k].text.insert(
              tokens[k].text.begin() + static_cast<std::ptrdiff_t>(*split_at[k]),
              kZwnj);
        }
      }
    }
    std::vector<AffixJoinPoint> joins;
    if (config_.repair_affixes) joins = plan_affix_joins(tokens, config_.lexicon);

    std::size_t next_join = 0;
    for (std::size_t first = 0; first < tokens.size();) {
      std::size_t last = first;
      std::vector<AffixSide> sides;
      while (next_join < joins.size() && joins[next_join].left == last) {
        sides.push_back(joins[next_join].affix);
        ++last;
        ++next_join;
      }
      plan_group(tokens, split_at, first, last, sides, edits);
      first = last + 1;
    }
    return edits;
  }

 private:
  bool changed(std::size_t cell) const {
    return cells_.stage[cell] != Stage::None ||
           (options_.report_zwj && text_[cell] == kZwj);
  }

  // Whether any input code point behind normalized[a, b) was rewritten.
  bool region_changed(std::size_t a, std::size_t b) const {
    for (std::size_t c = cells_.cell_of(a), last = cells_.cell_of(b - 1); c <= last; ++c) {
      if (changed(c)) return true;
    }
    return false;
  }

  std::u32string_view slice(const Span& s) const {
    return std::u32string_view(cells_.normalized).substr(s.start, s.size());
  }

  // Emits the edits for tokens [first, last], joined in that order; `sides`
  // gives the affix side of each join.
  void plan_group(const std::vector<Token>& tokens,
                  const std::vector<std::optional<std::size_t>>& split_at,
                  std::size_t first, std::size_t last,
                  const std::vector<AffixSide>& sides,
                  std::vector<Edit>& edits) const {
    bool any_split = false;
    for (std::size_t m = first; m <= last; ++m) any_split = any_split || split_at[m];
    if (first == last && !any_split) return;

    // Rebuild the merged token and find which inserted ZWNJs survive cleanup.
    std::u32string merged;
    std::vector<std::size_t> split_pos(last - first + 1, std::u32string::npos);
    std::vector<std::size_t> join_pos;
    for (std::size_t m = first; m <= last; ++m) {
      if (m > first) {
        join_pos.push_back(merged.size());
        merged.push_back(kZwnj);
      }
      if (split_at[m]) split_pos[m - first] = merged.size() + *split_at[m];
      merged += tokens[m].text;
    }
    std::vector<std::size_t> drop;
    if (config_.normalization.fix_zwnj) drop = redundant_zwnj_positions(merged);
    const auto dropped = [&drop](std::size_t pos) {
      return std::binary_search(drop.begin(), drop.end(), pos);
    };
    const std::size_t inserted_drops = static_cast<std::size_t>(
        std::count_if(join_pos.begin(), join_pos.end(), dropped) +
        std::count_if(split_pos.begin(), split_pos.end(), dropped));
    if (drop.size() != inserted_drops) {
      // Cleanup touched a ZWNJ that was already there; rewrite the whole
      // group in one piece.
      edits.push_back({tokens[first].span.start, tokens[last].span.end,
                       fix_zwnj(merged),
                       sides.empty() ? ViolationKind::AttachedAffix
                                     : ViolationKind::SpaceJoinedAffix});
      return;
    }

    std::size_t covered = 0;  // end of the last edit, in normalized offsets
    for (std::size_t m = first; m <= last; ++m) {
      if (m > first) {
        const std::u32string joiner =
            dropped(join_pos[m - first - 1]) ? U"" : std::u32string(1, kZwnj);
        plan_join(tokens[m - 1], tokens[m], sides[m - first - 1], joiner, covered,
                  edits);
        covered = edits.back().b;
      }
      if (split_at[m] && !dropped(split_pos[m - first])) {
        const Token& t = tokens[m];
        const std::size_t p = t.span.start + *split_at[m];
        if (!region_changed(p, t.span.end)) {
          std::u32string repl(1, kZwnj);
          repl += slice({p, t.span.end});
          edits.push_back({p, t.span.end, std::move(repl), ViolationKind::AttachedAffix});
        } else {
          edits.push_back({p, p, std::u32string(1, kZwnj), ViolationKind::AttachedAffix});
        }
      }
    }
  }

  // The gap between two joined tokens becomes `joiner`. When the affix token
  // is clean, the edit also covers it so the fix reads as a whole.
  void plan_join(const Token& left, const Token& right, AffixSide affix,
                 const std::u32string& joiner, std::size_t covered,
                 std::vector<Edit>& edits) const {
    const Token& affix_token = affix == AffixSide::Suffix ? right : left;
    const bool extend = affix_token.span.start >= covered &&
                        affix_token.text == slice(affix_token.span) &&
                        !region_changed(affix_token.span.start, affix_token.span.end);
    Edit edit{left.span.end, right.span.start, joiner, ViolationKind::SpaceJoinedAffix};
    if (extend && affix == AffixSide::Suffix) {
      edit.b = right.span.end;
      edit.replacement += right.text;
    } else if (extend) {
      edit.a = left.span.start;
      edit.replacement = left.text + joiner;
    }
    edits.push_back(std::move(edit));
  }

  const CellMap& cells_;
  std::u32string_view text_;
  const PipelineConfig& config_;
  const CheckOptions& options_;
};

ViolationKind kind_of(Stage stage, char32_t original) {
  switch (stage) {
    case Stage::Map:
      return classify(original) == CharClass::ArabicIndicDigit
                 ? ViolationKind::ArabicIndicDigit
                 : ViolationKind::NonStandardLetter;
    case Stage::Tatweel: return ViolationKind::Tatweel;
    case Stage::Diacritic: return ViolationKind::ShortVowel;
    case Stage::Digit: return ViolationKind::ArabicIndicDigit;
    case Stage::Zwnj: return ViolationKind::ZwnjMisuse;
    case Stage::None: break;
  }
  return ViolationKind::ZwjPresent;
}

// Input-side extent of an edit: [first, last) in cell indices.
struct CellRange {
  std::size_t first;
  std::size_t last;
  std::vector<const Edit*> edits;
};

std::vector<CellRange> to_cell_ranges(const CellMap& cells,
                                      const std::vector<Edit>& edits) {
  std::vector<CellRange> ranges;
  for (const Edit& e : edits) {
    if (e.a < e.b) {
      ranges.push_back({cells.cell_of(e.a), cells.cell_of(e.b - 1) + 1, {&e}});
      continue;
    }
    const std::size_t c = cells.cell_of(e.a);
    if (cells.start[c] == e.a) {
      ranges.push_back({c, c, {&e}});
    } else {
      ranges.push_back({c, c + 1, {&e}});
    }
  }
  std::sort(ranges.begin(), ranges.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.last < y.last;
  });
  // Merge ranges that share input code points.
  std::vector<CellRange> merged;
  for (auto& r : ranges) {
    if (!merged.empty() && r.first < merged.back().last) {
      CellRange& m = merged.back();
      m.last = std::max(m.last, r.last);
      m.edits.insert(m.edits.end(), r.edits.begin(), r.edits.end());
    } else {
      merged.push_back(std::move(r));
    }
  }
  return merged;
}

// normalized[from, to) with every edit of `edits` applied.
std::u32string apply_edits(std::u32string_view normalized, std::size_t from,
                           std::size_t to, std::vector<const Edit*> edits) {
  std::sort(edits.begin(), edits.end(), [](const Edit* x, const Edit* y) {
    return x->a != y->a ? x->a < y->a : x->b < y->b;
  });
  std::u32string out;
  std::size_t cursor = from;
  for (const Edit* e : edits) {
    out.append(normalized.substr(cursor, e->a - cursor));
    out += e->replacement;
    cursor = e->b;
  }
  out.append(normalized.substr(cursor, to - cursor));
  return out;
}

}  // namespace

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::NonStandardLetter: return "NonStandardLetter";
    case ViolationKind::Tatweel: return "Tatweel";
    case ViolationKind::ShortVowel: return "ShortVowel";
    case ViolationKind::ArabicIndicDigit: return "ArabicIndicDigit";
    case ViolationKind::ZwnjMisuse: return "ZwnjMisuse";
    case ViolationKind::SpaceJoinedAffix: return "SpaceJoinedAffix";
    case ViolationKind::AttachedAffix: return "AttachedAffix";
    case ViolationKind::ZwjPresent: return "ZwjPresent";
  }
  return "ZwjPresent";
}

void Report::add(Violation violation) {
  ++counts[violation.kind];
  violations.push_back(std::move(violation));
}

void Report::append(const Report& other, std::size_t offset) {
  for (Violation v : other.violations) {
    v.span.start += offset;
    v.span.end += offset;
    add(std::move(v));
  }
  total_code_points += other.total_code_points;
}

Report check(std::u32string_view text, const PipelineConfig& config,
             CheckOptions options) {
  const CellMap cells = build_cells(text, config.normalization);
  const std::size_t n = text.size();

  std::vector<Edit> edits;
  if (config.repair_affixes || config.split_attached) {
    edits = StructuralPlanner(cells, text, config, options).plan();
  }

  std::vector<Violation> violations;
  std::vector<bool> absorbed(n, false);
  for (const CellRange& r : to_cell_ranges(cells, edits)) {
    Violation v;
    v.kind = r.edits.front()->kind;
    v.span = {r.first, r.last};
    v.found = std::u32string(text.substr(r.first, r.last - r.first));
    v.suggested = apply_edits(cells.normalized, cells.start[r.first],
                              cells.start[r.last], r.edits);
    for (std::size_t c = r.first; c < r.last; ++c) absorbed[c] = true;
    if (v.suggested != v.found) violations.push_back(std::move(v));
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (absorbed[i]) continue;
    const Stage stage = cells.stage[i];
    if (stage == Stage::None && !(options.report_zwj && text[i] == kZwj)) continue;
    Violation v;
    v.kind = kind_of(stage, text[i]);
    v.span = {i, i + 1};
    v.found = std::u32string(1, text[i]);
    if (stage != Stage::None) {
      v.suggested = cells.normalized.substr(cells.start[i],
                                            cells.start[i + 1] - cells.start[i]);
    }
    violations.push_back(std::move(v));
  }

  std::sort(violations.begin(), violations.end(),
            [](const Violation& x, const Violation& y) {
              return x.span.start != y.span.start ? x.span.start < y.span.start
                                                  : x.span.end < y.span.end;
            });
  Report report;
  report.total_code_points = n;
  for (auto& v : violations) report.add(std::move(v));
  return report;
}

Report check(std::u32string_view text, const NormalizationConfig& config,
             const AffixLexicon& lexicon) {
  PipelineConfig pipeline;
  pipeline.normalization = config;
  pipeline.lexicon = lexicon;
  return check(text, pipeline);
}

std::u32string apply_fixes(std::u32string_view text, const Report& report) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t cursor = 0;
  for (const Violation& v : report.violations) {
    if (!v.suggested) continue;
    if (v.span.start < cursor || v.span.end < v.span.start || v.span.end > text.size()) {
      throw std::invalid_argument("violations overlap or exceed the text");
    }
    out.append(text.substr(cursor, v.span.start - cursor));
    out += *v.suggested;
    cursor = v.span.end;
  }
  out.append(text.substr(cursor));
  return out;
}

std::string render_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json doc;
    doc["total_code_points"] = report.total_code_points;
    doc["counts"] = nlohmann::ordered_json::object();
    for (const auto& [kind, count] : report.counts) {
      doc["counts"][std::string(to_string(kind))] = count;
    }
    doc["violations"] = nlohmann::ordered_json::array();
    for (const Violation& v : report.violations) {
      nlohmann::ordered_json item;
      item["kind"] = to_string(v.kind);
      item["start"] = v.span.start;
      item["end"] = v.span.end;
      item["found"] = utf8::encode(v.found);
      if (v.suggested) {
        item["suggested"] = utf8::encode(*v.suggested);
      } else {
        item["suggested"] = nullptr;
      }
      doc["violations"].push_back(std::move(item));
    }
    return doc.dump() + "\n";
  }

  std::string out;
  for (const Violation& v : report.violations) {
    out += std::to_string(v.span.start) + "-" + std::to_string(v.span.end) + " ";
    out += to_string(v.kind);
    out += ": \"" + utf8::encode(v.found) + "\"";
    if (v.suggested) {
      out += " -> \"" + utf8::encode(*v.suggested) + "\"";
      out += " [" + utf8::to_hex(v.found) + " -> " + utf8::to_hex(*v.suggested) + "]\n";
    } else {
      out += " [" + utf8::to_hex(v.found) + "] (no fix)\n";
    }
  }
  for (const auto& [kind, count] : report.counts) {
    out += std::string(to_string(kind)) + ": " + std::to_string(count) + "\n";
  }
  out += "total: " + std::to_string(report.violations.size()) + " violation(s) in " +
         std::to_string(report.total_code_points) + " code points\n";
  return out;
}

}  // namespace farsi
