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

#ifndef FARSI_TESTS_SUPPORT_ORACLE_HPP_
#define FARSI_TESTS_SUPPORT_ORACLE_HPP_

// A deliberately naive reference rewriter for the probe alphabet. It shares
// no code or tables with the library: the per-character rules are spelled
// out by hand and ZWNJ cleanup deletes one offending ZWNJ at a time until
// none is left.

#include <string>
#include <vector>

namespace farsi::testing {

// Two variant letters, two standard letters, TATWEEL, two short vowels, ZWNJ,
// space, one Arabic-Indic digit, one Persian digit and the full stop.
inline const std::vector<char32_t>& probe_alphabet() {
  static const std::vector<char32_t> alphabet = {
      0x064A, 0x0643, 0x0628, 0x062F, 0x0640, 0x064E,
      0x0650, 0x200C, 0x0020, 0x0663, 0x06F5, 0x002E,
  };
  return alphabet;
}

inline std::u32string oracle_normalize(const std::u32string& input) {
  std::u32string s;
  for (char32_t c : input) {
    switch (c) {
      case 0x064A: s.push_back(0x06CC); break;  // Arabic yeh
      case 0x0643: s.push_back(0x06A9); break;  // Arabic kaf
      case 0x0640: break;                       // TATWEEL
      case 0x064E: case 0x0650: break;          // fatha, kasra
      case 0x0663: s.push_back(0x06F3); break;  // Arabic-Indic three
      default: s.push_back(c);
    }
  }
  // Only yeh, kaf and beh join on both sides.
  const auto dual = [](char32_t c) { return c == 0x06CC || c == 0x06A9 || c == 0x0628; };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != 0x200C) continue;
      const bool at_edge = i == 0 || i + 1 == s.size();
      const bool doubled = !at_edge && s[i - 1] == 0x200C;
      const bool spaced = (i > 0 && s[i - 1] == U' ') || (i + 1 < s.size() && s[i + 1] == U' ');
      const bool no_join = i > 0 && s[i - 1] != 0x200C && !dual(s[i - 1]);
      if (at_edge || doubled || spaced || no_join) {
        s.erase(i, 1);
        changed = true;
        break;
      }
    }
  }
  return s;
}

}  // namespace farsi::testing

#endif  // FARSI_TESTS_SUPPORT_ORACLE_HPP_
