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

#ifndef FARSI_NORMALIZER_HPP_
#define FARSI_NORMALIZER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "farsi/charset.hpp"

namespace farsi {

enum class DigitMode {
  Persian,   // Arabic-Indic digits become Extended Arabic-Indic digits.
  Preserve,  // Digits are left alone.
};

// Switches for the character-level standardization stages. The defaults
// produce the canonical form; `identity()` turns every stage off.
struct NormalizationConfig {
  bool map_variants = true;
  bool remove_tatweel = true;
  bool strip_diacritics = true;
  DigitMode unify_digits = DigitMode::Persian;
  bool fix_zwnj = true;
  MappingTable mapping = default_mapping_table();

  static NormalizationConfig identity() {
    NormalizationConfig config;
    config.map_variants = false;
    config.remove_tatweel = false;
    config.strip_diacritics = false;
    config.unify_digits = DigitMode::Preserve;
    config.fix_zwnj = false;
    return config;
  }
};

// Replaces every source code point of `table` by its replacement in one
// left-to-right pass.
std::u32string map_characters(std::u32string_view text,
                              const MappingTable& table);

std::u32string remove_tatweel(std::u32string_view text);

// Deletes every code point classified as Diacritic.
std::u32string strip_diacritics(std::u32string_view text);

std::u32string unify_digits(std::u32string_view text, DigitMode mode);

// ZWNJ cleanup. A ZWNJ is dropped when it
//   - repeats the ZWNJ before it (runs collapse to one),
//   - touches a Space, the start or the end of the text, or
//   - follows a visible character that cannot join to the left, so there is
//     no joining for it to break.
// Transparent characters are skipped when looking for the preceding visible
// character. The result is a fixed point.
std::u32string fix_zwnj(std::u32string_view text);

// Positions of the ZWNJs that fix_zwnj() drops, ascending.
std::vector<std::size_t> redundant_zwnj_positions(std::u32string_view text);

// True when a ZWNJ placed right after `before` would break a real join: the
// last visible character of `before` (ignoring Transparent characters and
// ZWNJs) exists and is dual-joining.
bool zwnj_breaks_join(std::u32string_view before) noexcept;

// Applies the enabled stages in the fixed order
//   map_characters -> remove_tatweel -> strip_diacritics -> unify_digits
//   -> fix_zwnj.
// With DigitMode::Preserve, digit entries of the mapping table are skipped as
// well, so that digits are preserved end to end.
std::u32string normalize(std::u32string_view text,
                         const NormalizationConfig& config = {});

}  // namespace farsi

#endif  // FARSI_NORMALIZER_HPP_
