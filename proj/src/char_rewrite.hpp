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

#ifndef FARSI_SRC_CHAR_REWRITE_HPP_
#define FARSI_SRC_CHAR_REWRITE_HPP_

#include <cstdint>
#include <string>

#include "farsi/normalizer.hpp"

namespace farsi::internal {

// The normalization stage that first changed a code point.
enum class Stage : std::uint8_t { None, Map, Tatweel, Diacritic, Digit, Zwnj };

// Runs the context-free stages (mapping, TATWEEL, diacritics, digits) over a
// single code point and appends the result to `out`.
Stage rewrite_char(char32_t cp, const NormalizationConfig& config,
                   std::u32string& out);

}  // namespace farsi::internal

#endif  // FARSI_SRC_CHAR_REWRITE_HPP_
