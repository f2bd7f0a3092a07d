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

#include "farsi/utf8.hpp"

#include <gtest/gtest.h>

#include <random>

namespace farsi::utf8 {
namespace {

TEST(Utf8, RoundTrip) {
  const std::u32string text = U"aéک\u200C\U0001F600";
  EXPECT_EQ(decode(encode(text)), text);
  EXPECT_EQ(encode(text).size(), 1u + 2 + 2 + 3 + 4);
}

TEST(Utf8, RejectsMalformed) {
  struct Case {
    std::string bytes;
    std::size_t offset;
  };
  const Case cases[] = {
      {"\xFF", 0},
      {"ab\x80", 2},
      {"\xC0\xAF", 0},          // overlong
      {"\xE0\x80\xAF", 0},      // overlong
      {"\xED\xA0\x80", 0},      // surrogate
      {"\xF4\x90\x80\x80", 0},  // above U+10FFFF
      {"x\xDA", 1},             // truncated
      {"\xD9\x83\xE2\x80", 2},
  };
  for (const Case& c : cases) {
    EXPECT_EQ(find_invalid(c.bytes), c.offset);
    try {
      decode(c.bytes);
      ADD_FAILURE() << "accepted malformed input";
    } catch (const DecodeError& e) {
      EXPECT_EQ(e.byte_offset(), c.offset);
    }
  }
}

TEST(Utf8, RandomScalarsRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, 0x10FFFF);
  for (int i = 0; i < 2000; ++i) {
    std::u32string s;
    for (int k = 0; k < 16; ++k) {
      char32_t c = pick(rng);
      if (c >= 0xD800 && c <= 0xDFFF) c = 0x20;
      s.push_back(c);
    }
    const std::string bytes = encode(s);
    EXPECT_EQ(find_invalid(bytes), std::string::npos);
    EXPECT_EQ(decode(bytes), s);
  }
}

TEST(Utf8, Hex) {
  EXPECT_EQ(to_hex(U"يی"), "064A 06CC");
  EXPECT_EQ(to_hex(U""), "");
  EXPECT_EQ(to_hex(U"\U0001EE00"), "1EE00");
}

}  // namespace
}  // namespace farsi::utf8
