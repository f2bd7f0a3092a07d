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

#ifndef FARSI_UTF8_HPP_
#define FARSI_UTF8_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace farsi::utf8 {

// Thrown when a byte sequence is not well-formed UTF-8. The offset points at
// the first byte of the offending sequence.
class DecodeError : public std::runtime_error {
 public:
  explicit DecodeError(std::size_t byte_offset);

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Strict decoder: rejects overlong forms, surrogates, code points above
// U+10FFFF and truncated sequences.
std::u32string decode(std::string_view bytes);

// Returns the offset of the first invalid sequence, or npos.
std::size_t find_invalid(std::string_view bytes) noexcept;

void append(std::string& out, char32_t cp);
std::string encode(std::u32string_view text);

// Renders a code point sequence as space-separated uppercase hex, "064A 06CC".
std::string to_hex(std::u32string_view text);

}  // namespace farsi::utf8

#endif  // FARSI_UTF8_HPP_
