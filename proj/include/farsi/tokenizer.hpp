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

#ifndef FARSI_TOKENIZER_HPP_
#define FARSI_TOKENIZER_HPP_

#include <cstddef>
#include <iosfwd>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace farsi {

enum class TokenKind { Word, Number, Punct, Symbol };

std::string_view to_string(TokenKind kind) noexcept;

// Half-open range of code point offsets.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - start; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::u32string text;
  Span span;
  TokenKind kind = TokenKind::Word;

  friend bool operator==(const Token&, const Token&) = default;
};

class TokenizerConfig {
 public:
  // Dotted forms kept whole, e.g. "ق.م". Throws std::invalid_argument unless
  // the form is nonempty and contains a full stop.
  void add_abbreviation(std::u32string form);

  // Reads one abbreviation per line (UTF-8, `#` comments). Throws ParseError.
  void add_abbreviations(std::istream& in);

  const std::set<std::u32string>& abbreviations() const noexcept {
    return abbreviations_;
  }
  std::size_t longest_abbreviation() const noexcept {
    return longest_abbreviation_;
  }

  // Whether a hyphen between two letter runs keeps them in one Word.
  bool join_dash_compounds() const noexcept { return join_dash_compounds_; }
  void set_join_dash_compounds(bool join) noexcept { join_dash_compounds_ = join; }

 private:
  std::set<std::u32string> abbreviations_;
  std::size_t longest_abbreviation_ = 0;
  bool join_dash_compounds_ = true;
};

// Splits text into tokens. Spaces separate tokens and belong to none; every
// other code point lands in exactly one token. ZWNJ is word-internal. Full
// stops split unless part of a configured abbreviation; a slash or a decimal
// or thousands separator between digits stays inside the number; a hyphen
// between letter runs joins a compound. Remaining punctuation marks are
// single-code-point Punct tokens.
std::vector<Token> tokenize(std::u32string_view text,
                            const TokenizerConfig& config = {});

class CorruptTokensError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rebuilds `original` from its tokens and the characters between them.
// Throws CorruptTokensError when the spans are unordered, overlapping, out of
// range or do not match the text of `original`.
std::u32string detokenize(std::span<const Token> tokens,
                          std::u32string_view original);

// Like detokenize(), but token texts replace their spans verbatim and need
// not match `original`. Used to render rewritten token lists.
std::u32string splice(std::span<const Token> tokens,
                      std::u32string_view original);

}  // namespace farsi

#endif  // FARSI_TOKENIZER_HPP_
