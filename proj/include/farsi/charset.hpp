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

#ifndef FARSI_CHARSET_HPP_
#define FARSI_CHARSET_HPP_

// Character knowledge base for Persian text: per-code-point classification,
// cursive joining behavior, membership in the Persian standard repertoire and
// the variant-to-standard substitution tables.
//
// All tables are built once from data compiled into the library and are
// immutable afterwards, so every query here is pure and thread-safe.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace farsi {

inline constexpr char32_t kTatweel = U'\u0640';
inline constexpr char32_t kZwnj = U'\u200C';
inline constexpr char32_t kZwj = U'\u200D';
inline constexpr char32_t kByteOrderMark = U'\uFEFF';

enum class CharClass : std::uint8_t {
  FarsiLetter,
  ArabicVariantLetter,
  Diacritic,
  Tatweel,
  Zwnj,
  Zwj,
  Space,
  Punctuation,
  PersianDigit,
  ArabicIndicDigit,
  LatinDigit,
  Other,
};

enum class JoiningClass : std::uint8_t {
  DualJoining,
  RightJoining,
  NonJoining,
  Transparent,
};

std::string_view to_string(CharClass c) noexcept;
std::string_view to_string(JoiningClass j) noexcept;

// Total over all scalar values; values that are not scalar values (surrogates,
// > U+10FFFF) classify as Other.
CharClass classify(char32_t cp) noexcept;

// Unicode joining type, with join-causing characters (TATWEEL, ZWJ) folded
// into DualJoining and left-joining into NonJoining since no Persian letter is
// left-joining.
JoiningClass joining_class(char32_t cp) noexcept;

// True when the code point may appear in canonical Persian text. Only
// Arabic-script code points are governed by the repertoire; everything else
// is accepted.
bool is_standard(char32_t cp) noexcept;

// Whether `cp` is one of the Arabic-script blocks (Arabic, Supplement,
// Extended-A/B, Presentation Forms-A/B).
bool is_arabic_script(char32_t cp) noexcept;

// Whether `cp` is a digit of any of the three supported digit sets; `value`
// receives the digit's numeric value when non-null.
bool is_digit(char32_t cp, int* value = nullptr) noexcept;

struct CharRecord {
  char32_t code_point = 0;
  CharClass char_class = CharClass::Other;
  JoiningClass joining = JoiningClass::NonJoining;
  bool is_standard = true;
  // Replacement for a non-standard code point. An empty sequence means the
  // code point is dropped (TATWEEL).
  std::optional<std::u32string> canonical;

  friend bool operator==(const CharRecord&, const CharRecord&) = default;
};

CharRecord char_record(char32_t cp);

// An ordered single-pass substitution map. Sources are unique and no
// replacement contains any source, so applying the table once reaches its
// fixed point. Copies share the immutable entry storage.
class MappingTable {
 public:
  struct Entry {
    char32_t source = 0;
    std::u32string replacement;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  MappingTable();

  // Throws std::invalid_argument when the entries violate the table
  // invariants (duplicate source, empty replacement, cascade).
  explicit MappingTable(std::vector<Entry> entries,
                        std::string provenance = {});

  const std::vector<Entry>& entries() const noexcept;
  const std::string& provenance() const noexcept;
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  // Replacement for `cp`, or nullptr when `cp` is not a source.
  const std::u32string* find(char32_t cp) const noexcept;

  // True when every replacement is a single code point.
  bool is_one_to_one() const noexcept;

  friend bool operator==(const MappingTable& a, const MappingTable& b);

 private:
  struct Index;
  std::shared_ptr<const Index> index_;
};

// Variant letters and Arabic-Indic digits, strictly one-to-one.
const MappingTable& default_mapping_table();

// The default table plus presentation-form code points, some of which expand
// to several letters (lam-alef ligatures and the like).
const MappingTable& extended_mapping_table();

// Reads the table file format: one `SRC REPL [REPL...]` entry of hex code
// points per line, `#` comments, blank lines ignored. A
// `# provenance: <label>` comment sets the table label. Throws ParseError.
MappingTable load_mapping_table(std::istream& in,
                                std::string provenance = "file");
MappingTable load_mapping_table(const std::filesystem::path& path);

std::string serialize_mapping_table(const MappingTable& table);

}  // namespace farsi

#endif  // FARSI_CHARSET_HPP_
