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

#include "farsi/normalizer.hpp"

#include "char_rewrite.hpp"

namespace farsi {
namespace internal {
namespace {

constexpr char32_t kArabicIndicZero = 0x0660;
constexpr char32_t kPersianZero = 0x06F0;

void emit(char32_t cp, const NormalizationConfig& config, std::u32string& out,
          Stage& stage) {
  const auto mark = [&stage](Stage s) {
    if (stage == Stage::None) stage = s;
  };
  if (config.remove_tatweel && cp == kTatweel) {
    mark(Stage::Tatweel);
    return;
  }
  const CharClass c = classify(cp);
  if (config.strip_diacritics && c == CharClass::Diacritic) {
    mark(Stage::Diacritic);
    return;
  }
  if (config.unify_digits == DigitMode::Persian &&
      c == CharClass::ArabicIndicDigit) {
    out.push_back(cp - kArabicIndicZero + kPersianZero);
    mark(Stage::Digit);
    return;
  }
  out.push_back(cp);
}

}  // namespace

Stage rewrite_char(char32_t cp, const NormalizationConfig& config,
                   std::u32string& out) {
  Stage stage = Stage::None;
  if (config.map_variants) {
    const std::u32string* repl = config.mapping.find(cp);
    if (repl && !(config.unify_digits == DigitMode::Preserve &&
                  classify(cp) == CharClass::ArabicIndicDigit)) {
      stage = Stage::Map;
      for (char32_t r : *repl) emit(r, config, out, stage);
      return stage;
    }
  }
  emit(cp, config, out, stage);
  return stage;
}

}  // namespace internal

namespace {

template <typename Keep>
std::u32string filter(std::u32string_view text, Keep keep) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (keep(cp)) out.push_back(cp);
  }
  return out;
}

}  // namespace

std::u32string map_characters(std::u32string_view text,
                              const MappingTable& table) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (const std::u32string* repl = table.find(cp)) {
      out += *repl;
    } else {
      out.push_back(cp);
    }
  }
  return out;
}

std::u32string remove_tatweel(std::u32string_view text) {
  return filter(text, [](char32_t cp) { return cp != kTatweel; });
}

std::u32string strip_diacritics(std::u32string_view text) {
  return filter(text,
                [](char32_t cp) { return classify(cp) != CharClass::Diacritic; });
}

std::u32string unify_digits(std::u32string_view text, DigitMode mode) {
  std::u32string out(text);
  if (mode == DigitMode::Preserve) return out;
  for (char32_t& cp : out) {
    if (classify(cp) == CharClass::ArabicIndicDigit) {
      cp = cp - internal::kArabicIndicZero + internal::kPersianZero;
    }
  }
  return out;
}

bool zwnj_breaks_join(std::u32string_view before) noexcept {
  for (auto it = before.rbegin(); it != before.rend(); ++it) {
    if (*it == kZwnj) continue;
    const JoiningClass j = joining_class(*it);
    if (j == JoiningClass::Transparent) continue;
    return j == JoiningClass::DualJoining;
  }
  return false;
}

std::vector<std::size_t> redundant_zwnj_positions(std::u32string_view text) {
  std::vector<std::size_t> positions;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    if (text[i] != kZwnj) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && text[j] == kZwnj) ++j;
    const bool drop_run = i == 0 || j == n ||
                          classify(text[i - 1]) == CharClass::Space ||
                          classify(text[j]) == CharClass::Space ||
                          !zwnj_breaks_join(text.substr(0, i));
    for (std::size_t k = drop_run ? i : i + 1; k < j; ++k) positions.push_back(k);
    i = j;
  }
  return positions;
}

std::u32string fix_zwnj(std::u32string_view text) {
  const std::vector<std::size_t> drop = redundant_zwnj_positions(text);
  if (drop.empty()) return std::u32string(text);
  std::u32string out;
  out.reserve(text.size() - drop.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (next < drop.size() && drop[next] == i) {
      ++next;
      continue;
    }
    out.push_back(text[i]);
  }
  return out;
}

std::u32string normalize(std::u32string_view text,
                         const NormalizationConfig& config) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t cp : text) internal::rewrite_char(cp, config, out);
  if (config.fix_zwnj && out.find(kZwnj) != std::u32string::npos) {
    return fix_zwnj(out);
  }
  return out;
}

}  // namespace farsi
