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

#include "farsi/charset.hpp"

#include <array>
#include <sstream>
#include <string>
#include <unordered_set>

#include "embedded_data.hpp"

namespace farsi {
namespace {

struct Range {
  char32_t first;
  char32_t last;
};

struct JoiningRange {
  char32_t first;
  char32_t last;
  JoiningClass joining;
};

constexpr auto D = JoiningClass::DualJoining;
constexpr auto R = JoiningClass::RightJoining;
constexpr auto U = JoiningClass::NonJoining;
constexpr auto T = JoiningClass::Transparent;

// Joining types of the Arabic and Arabic Supplement blocks, transcribed from
// ArabicShaping.txt (join-causing TATWEEL folded into D).
constexpr JoiningRange kArabicJoining[] = {
    {0x0600, 0x060F, U}, {0x0610, 0x061A, T}, {0x061B, 0x061B, U},
    {0x061C, 0x061C, T}, {0x061D, 0x061F, U}, {0x0620, 0x0620, D},
    {0x0621, 0x0621, U}, {0x0622, 0x0625, R}, {0x0626, 0x0626, D},
    {0x0627, 0x0627, R}, {0x0628, 0x0628, D}, {0x0629, 0x0629, R},
    {0x062A, 0x062E, D}, {0x062F, 0x0632, R}, {0x0633, 0x063F, D},
    {0x0640, 0x0640, D}, {0x0641, 0x0647, D}, {0x0648, 0x0648, R},
    {0x0649, 0x064A, D}, {0x064B, 0x065F, T}, {0x0660, 0x066D, U},
    {0x066E, 0x066F, D}, {0x0670, 0x0670, T}, {0x0671, 0x0673, R},
    {0x0674, 0x0674, U}, {0x0675, 0x0677, R}, {0x0678, 0x0687, D},
    {0x0688, 0x0699, R}, {0x069A, 0x06BF, D}, {0x06C0, 0x06C0, R},
    {0x06C1, 0x06C2, D}, {0x06C3, 0x06CB, R}, {0x06CC, 0x06CC, D},
    {0x06CD, 0x06CD, R}, {0x06CE, 0x06CE, D}, {0x06CF, 0x06CF, R},
    {0x06D0, 0x06D1, D}, {0x06D2, 0x06D3, R}, {0x06D4, 0x06D4, U},
    {0x06D5, 0x06D5, R}, {0x06D6, 0x06DC, T}, {0x06DD, 0x06DE, U},
    {0x06DF, 0x06E4, T}, {0x06E5, 0x06E6, U}, {0x06E7, 0x06E8, T},
    {0x06E9, 0x06E9, U}, {0x06EA, 0x06ED, T}, {0x06EE, 0x06EF, R},
    {0x06F0, 0x06F9, U}, {0x06FA, 0x06FC, D}, {0x06FD, 0x06FE, U},
    {0x06FF, 0x06FF, D},
    {0x0750, 0x0758, D}, {0x0759, 0x075B, R}, {0x075C, 0x076A, D},
    {0x076B, 0x076C, R}, {0x076D, 0x0770, D}, {0x0771, 0x0771, R},
    {0x0772, 0x0772, D}, {0x0773, 0x0774, R}, {0x0775, 0x0777, D},
    {0x0778, 0x0779, R}, {0x077A, 0x077F, D},
    {0x0897, 0x089F, T}, {0x08CA, 0x08E1, T}, {0x08E3, 0x08FF, T},
};

// Combining marks and format characters outside the Arabic block; the
// derived joining type of Mn, Me and Cf is Transparent.
constexpr Range kTransparentElsewhere[] = {
    {0x00AD, 0x00AD}, {0x0300, 0x036F}, {0x0483, 0x0489}, {0x180E, 0x180E},
    {0x1AB0, 0x1AFF}, {0x1DC0, 0x1DFF}, {0x200B, 0x200B}, {0x200E, 0x200F},
    {0x202A, 0x202E}, {0x2060, 0x2064}, {0x2066, 0x206F}, {0x20D0, 0x20FF},
    {0xFE00, 0xFE0F}, {0xFE20, 0xFE2F}, {0xFEFF, 0xFEFF},
};

constexpr Range kArabicScript[] = {
    {0x0600, 0x06FF}, {0x0750, 0x077F}, {0x0870, 0x08FF},
    {0xFB50, 0xFDFF}, {0xFE70, 0xFEFE}, {0x1EE00, 0x1EEFF},
};

constexpr Range kSpace[] = {
    {0x0009, 0x000D}, {0x0020, 0x0020}, {0x0085, 0x0085}, {0x00A0, 0x00A0},
    {0x1680, 0x1680}, {0x2000, 0x200A}, {0x2028, 0x2029}, {0x202F, 0x202F},
    {0x205F, 0x205F}, {0x3000, 0x3000},
};

// Arabic-script combining marks: harakat, Quranic annotation signs and
// superscript alef.
constexpr Range kDiacritic[] = {
    {0x0610, 0x061A}, {0x064B, 0x065F}, {0x0670, 0x0670}, {0x06D6, 0x06DC},
    {0x06DF, 0x06E4}, {0x06E7, 0x06E8}, {0x06EA, 0x06ED}, {0x0897, 0x089F},
    {0x08CA, 0x08E1}, {0x08E3, 0x08FF},
};

constexpr Range kPunctuation[] = {
    {0x0021, 0x0023}, {0x0025, 0x002A}, {0x002C, 0x002F}, {0x003A, 0x003B},
    {0x003F, 0x0040}, {0x005B, 0x005D}, {0x005F, 0x005F}, {0x007B, 0x007B},
    {0x007D, 0x007D}, {0x00A1, 0x00A1}, {0x00A7, 0x00A7}, {0x00AB, 0x00AB},
    {0x00B6, 0x00B7}, {0x00BB, 0x00BB}, {0x00BF, 0x00BF}, {0x060C, 0x060D},
    {0x061B, 0x061B}, {0x061D, 0x061F}, {0x066A, 0x066D}, {0x06D4, 0x06D4},
    {0x2010, 0x2027}, {0x2030, 0x2043}, {0x2045, 0x2051}, {0x2053, 0x205E},
    {0xFD3E, 0xFD3F},
};

// Per-BMP-code-point packed record: class in bits 0-3, joining in bits 4-5,
// standard flag in bit 6.
class CharTable {
 public:
  CharTable() {
    for (char32_t cp = 0; cp < kSize; ++cp) {
      set(cp, CharClass::Other, JoiningClass::NonJoining,
          !in_ranges(cp, kArabicScript));
    }
    for (const auto& r : kArabicJoining) {
      for (char32_t cp = r.first; cp <= r.last; ++cp) set_joining(cp, r.joining);
    }
    for (const auto& r : kTransparentElsewhere) {
      for (char32_t cp = r.first; cp <= r.last; ++cp) {
        set_joining(cp, JoiningClass::Transparent);
      }
    }
    set_joining(kZwj, JoiningClass::DualJoining);

    const std::unordered_set<char32_t> repertoire = parse_repertoire();
    for (char32_t cp = 0; cp < kSize; ++cp) {
      if (in_ranges(cp, kArabicScript)) set_standard(cp, repertoire.count(cp) > 0);
    }

    for (const auto& r : kPunctuation) fill(r, CharClass::Punctuation);
    for (const auto& r : kDiacritic) fill(r, CharClass::Diacritic);
    for (const auto& r : kSpace) fill(r, CharClass::Space);
    fill({0x0030, 0x0039}, CharClass::LatinDigit);
    fill({0x0660, 0x0669}, CharClass::ArabicIndicDigit);
    fill({0x06F0, 0x06F9}, CharClass::PersianDigit);
    fill({kTatweel, kTatweel}, CharClass::Tatweel);
    fill({kZwnj, kZwnj}, CharClass::Zwnj);
    fill({kZwj, kZwj}, CharClass::Zwj);

    // Remaining repertoire members are letters; base-table sources that are
    // still unclassified are the variant letters.
    for (char32_t cp : repertoire) {
      if (cp < kSize && char_class(cp) == CharClass::Other) {
        set_class(cp, CharClass::FarsiLetter);
      }
    }
    for (const auto& e : default_mapping_table().entries()) {
      if (e.source < kSize && char_class(e.source) == CharClass::Other) {
        set_class(e.source, CharClass::ArabicVariantLetter);
      }
    }
  }

  CharClass char_class(char32_t cp) const {
    return static_cast<CharClass>(cells_[cp] & 0x0F);
  }
  JoiningClass joining(char32_t cp) const {
    return static_cast<JoiningClass>((cells_[cp] >> 4) & 0x03);
  }
  bool standard(char32_t cp) const { return (cells_[cp] & 0x40) != 0; }

  static constexpr char32_t kSize = 0x10000;

 private:
  static bool in_ranges(char32_t cp, const auto& ranges) {
    for (const auto& r : ranges) {
      if (cp >= r.first && cp <= r.last) return true;
    }
    return false;
  }

  static std::unordered_set<char32_t> parse_repertoire() {
    std::unordered_set<char32_t> members;
    std::istringstream in{std::string(embedded::kRepertoire)};
    std::string line;
    while (std::getline(in, line)) {
      line = line.substr(0, line.find('#'));
      std::istringstream fields(line);
      std::string hex;
      if (fields >> hex) members.insert(static_cast<char32_t>(std::stoul(hex, nullptr, 16)));
    }
    return members;
  }

  void set(char32_t cp, CharClass c, JoiningClass j, bool standard) {
    cells_[cp] = static_cast<std::uint8_t>(static_cast<unsigned>(c) |
                                           (static_cast<unsigned>(j) << 4) |
                                           (standard ? 0x40u : 0u));
  }
  void set_class(char32_t cp, CharClass c) { set(cp, c, joining(cp), standard(cp)); }
  void set_joining(char32_t cp, JoiningClass j) { set(cp, char_class(cp), j, standard(cp)); }
  void set_standard(char32_t cp, bool s) { set(cp, char_class(cp), joining(cp), s); }
  void fill(Range r, CharClass c) {
    for (char32_t cp = r.first; cp <= r.last; ++cp) set_class(cp, c);
  }

  std::array<std::uint8_t, kSize> cells_{};
};

const CharTable& char_table() {
  static const CharTable table;
  return table;
}

}  // namespace

std::string_view to_string(CharClass c) noexcept {
  switch (c) {
    case CharClass::FarsiLetter: return "FarsiLetter";
    case CharClass::ArabicVariantLetter: return "ArabicVariantLetter";
    case CharClass::Diacritic: return "Diacritic";
    case CharClass::Tatweel: return "Tatweel";
    case CharClass::Zwnj: return "Zwnj";
    case CharClass::Zwj: return "Zwj";
    case CharClass::Space: return "Space";
    case CharClass::Punctuation: return "Punctuation";
    case CharClass::PersianDigit: return "PersianDigit";
    case CharClass::ArabicIndicDigit: return "ArabicIndicDigit";
    case CharClass::LatinDigit: return "LatinDigit";
    case CharClass::Other: return "Other";
  }
  return "Other";
}

std::string_view to_string(JoiningClass j) noexcept {
  switch (j) {
    case JoiningClass::DualJoining: return "DualJoining";
    case JoiningClass::RightJoining: return "RightJoining";
    case JoiningClass::NonJoining: return "NonJoining";
    case JoiningClass::Transparent: return "Transparent";
  }
  return "NonJoining";
}

CharClass classify(char32_t cp) noexcept {
  if (cp < CharTable::kSize) return char_table().char_class(cp);
  return CharClass::Other;
}

JoiningClass joining_class(char32_t cp) noexcept {
  if (cp < CharTable::kSize) return char_table().joining(cp);
  return JoiningClass::NonJoining;
}

bool is_arabic_script(char32_t cp) noexcept {
  for (const auto& r : kArabicScript) {
    if (cp >= r.first && cp <= r.last) return true;
  }
  return false;
}

bool is_standard(char32_t cp) noexcept {
  if (cp < CharTable::kSize) return char_table().standard(cp);
  return !is_arabic_script(cp);
}

bool is_digit(char32_t cp, int* value) noexcept {
  char32_t zero;
  if (cp >= U'0' && cp <= U'9') {
    zero = U'0';
  } else if (cp >= 0x0660 && cp <= 0x0669) {
    zero = 0x0660;
  } else if (cp >= 0x06F0 && cp <= 0x06F9) {
    zero = 0x06F0;
  } else {
    return false;
  }
  if (value) *value = static_cast<int>(cp - zero);
  return true;
}

CharRecord char_record(char32_t cp) {
  CharRecord record;
  record.code_point = cp;
  record.char_class = classify(cp);
  record.joining = joining_class(cp);
  record.is_standard = is_standard(cp);
  if (!record.is_standard) {
    if (const auto* repl = extended_mapping_table().find(cp)) {
      record.canonical = *repl;
    } else if (cp == kTatweel) {
      record.canonical = std::u32string{};
    }
  }
  return record;
}

}  // namespace farsi
