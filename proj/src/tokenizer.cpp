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

#include "farsi/tokenizer.hpp"

#include <algorithm>
#include <istream>

#include "farsi/charset.hpp"
#include "farsi/error.hpp"
#include "farsi/utf8.hpp"

namespace farsi {
namespace {

enum class Cat { Space, Letter, Digit, Joiner, Punct, Symbol };

bool is_symbol(char32_t cp) {
  if (cp < 0x20 || (cp >= 0x7F && cp <= 0x9F)) return true;
  switch (cp) {
    case U'$': case U'+': case U'<': case U'=': case U'>': case U'^':
    case U'`': case U'|': case U'~': case 0x00A8: case 0x00A9: case 0x00AC:
    case 0x00B4: case 0x00B8: case 0x00D7: case 0x00F7: case 0x060E:
    case 0x060F: case 0x06DD: case 0x06DE: case 0x06E9: case 0x06FD:
    case 0x06FE: case 0x200B: case 0x200E: case 0x200F: case kByteOrderMark:
      return true;
    default:
      break;
  }
  return (cp >= 0x00A2 && cp <= 0x00A6) || (cp >= 0x00AE && cp <= 0x00B1) ||
         (cp >= 0x0600 && cp <= 0x060B) || (cp >= 0x202A && cp <= 0x202E) ||
         (cp >= 0x2060 && cp <= 0x206F) || (cp >= 0x20A0 && cp <= 0x20CF) ||
         (cp >= 0x2100 && cp <= 0x214F) || (cp >= 0x2190 && cp <= 0x2BFF) ||
         (cp >= 0x2E00 && cp <= 0x2E7F) || (cp >= 0xE000 && cp <= 0xF8FF) ||
         (cp >= 0xFFF0 && cp <= 0xFFFF) || (cp >= 0x1F000 && cp <= 0x1FAFF);
}

Cat category(char32_t cp) {
  switch (classify(cp)) {
    case CharClass::Space:
      return Cat::Space;
    case CharClass::FarsiLetter:
    case CharClass::ArabicVariantLetter:
    case CharClass::Diacritic:
    case CharClass::Tatweel:
      return Cat::Letter;
    case CharClass::Zwnj:
    case CharClass::Zwj:
      return Cat::Joiner;
    case CharClass::PersianDigit:
    case CharClass::ArabicIndicDigit:
    case CharClass::LatinDigit:
      return Cat::Digit;
    case CharClass::Punctuation:
      return Cat::Punct;
    case CharClass::Other:
      return is_symbol(cp) ? Cat::Symbol : Cat::Letter;
  }
  return Cat::Symbol;
}

bool word_char(Cat c) { return c == Cat::Letter || c == Cat::Digit; }
bool wordish(Cat c) { return word_char(c) || c == Cat::Joiner; }

bool is_full_stop(char32_t cp) { return cp == U'.' || cp == 0x06D4; }
bool is_dash(char32_t cp) { return cp == U'-' || cp == 0x2010 || cp == 0x2011; }
// Slash, Arabic decimal separator, Arabic thousands separator.
bool is_number_joiner(char32_t cp) {
  return cp == U'/' || cp == 0x066B || cp == 0x066C;
}

class Scanner {
 public:
  Scanner(std::u32string_view text, const TokenizerConfig& config,
          std::size_t longest_abbreviation)
      : text_(text), config_(config), longest_(longest_abbreviation) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    const std::size_t n = text_.size();
    std::size_t i = 0;
    while (i < n) {
      const Cat c = cat(i);
      if (c == Cat::Space) {
        ++i;
        continue;
      }
      if (longest_ > 0 && (i == 0 || !wordish(cat(i - 1)))) {
        if (const std::size_t j = match_abbreviation(i); j > i) {
          push(tokens, i, j, TokenKind::Word);
          i = j;
          continue;
        }
      }
      switch (c) {
        case Cat::Letter:
        case Cat::Digit: {
          bool has_letter = false;
          const std::size_t j = scan_word(i, has_letter);
          push(tokens, i, j, has_letter ? TokenKind::Word : TokenKind::Number);
          i = j;
          break;
        }
        case Cat::Punct:
          push(tokens, i, i + 1, TokenKind::Punct);
          ++i;
          break;
        default:
          // Symbols, and joiners with no word on their right.
          push(tokens, i, i + 1, TokenKind::Symbol);
          ++i;
          break;
      }
    }
    return tokens;
  }

 private:
  Cat cat(std::size_t i) const { return category(text_[i]); }

  void push(std::vector<Token>& tokens, std::size_t i, std::size_t j,
            TokenKind kind) const {
    tokens.push_back(Token{std::u32string(text_.substr(i, j - i)), {i, j}, kind});
  }

  // Longest configured abbreviation starting at `i` that ends at a word
  // boundary; returns its end, or `i` when none matches.
  std::size_t match_abbreviation(std::size_t i) const {
    const std::size_t n = text_.size();
    for (std::size_t len = std::min(longest_, n - i); len > 0; --len) {
      const std::size_t j = i + len;
      if (j < n && wordish(cat(j))) continue;
      if (config_.abbreviations().count(std::u32string(text_.substr(i, len)))) {
        return j;
      }
    }
    return i;
  }

  std::size_t scan_word(std::size_t i, bool& has_letter) const {
    const std::size_t n = text_.size();
    has_letter = cat(i) == Cat::Letter;
    std::size_t j = i + 1;
    while (j < n) {
      const Cat c = cat(j);
      if (word_char(c)) {
        has_letter = has_letter || c == Cat::Letter;
        ++j;
        continue;
      }
      if (c == Cat::Joiner) {
        std::size_t k = j;
        while (k < n && cat(k) == Cat::Joiner) ++k;
        if (k < n && word_char(cat(k))) {
          j = k;
          continue;
        }
        break;
      }
      if (c == Cat::Punct && j + 1 < n) {
        const char32_t cp = text_[j];
        const Cat prev = cat(j - 1);
        const Cat next = cat(j + 1);
        if (is_number_joiner(cp) && prev == Cat::Digit && next == Cat::Digit) {
          ++j;
          continue;
        }
        if (is_dash(cp) && config_.join_dash_compounds() &&
            prev == Cat::Letter && next == Cat::Letter) {
          ++j;
          continue;
        }
      }
      break;
    }
    return j;
  }

  std::u32string_view text_;
  const TokenizerConfig& config_;
  std::size_t longest_;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void check_spans(std::span<const Token> tokens, std::size_t size) {
  std::size_t cursor = 0;
  for (const Token& t : tokens) {
    if (t.span.start < cursor || t.span.end <= t.span.start || t.span.end > size) {
      throw CorruptTokensError("token span [" + std::to_string(t.span.start) +
                               ", " + std::to_string(t.span.end) +
                               ") is out of order or out of range");
    }
    cursor = t.span.end;
  }
}

}  // namespace

std::string_view to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Word: return "Word";
    case TokenKind::Number: return "Number";
    case TokenKind::Punct: return "Punct";
    case TokenKind::Symbol: return "Symbol";
  }
  return "Symbol";
}

void TokenizerConfig::add_abbreviation(std::u32string form) {
  if (form.empty() || std::none_of(form.begin(), form.end(), is_full_stop)) {
    throw std::invalid_argument("abbreviation must contain a full stop");
  }
  longest_abbreviation_ = std::max(longest_abbreviation_, form.size());
  abbreviations_.insert(std::move(form));
}

void TokenizerConfig::add_abbreviations(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    std::u32string form;
    try {
      form = utf8::decode(line);
    } catch (const utf8::DecodeError&) {
      throw ParseError(line_no, "invalid UTF-8");
    }
    try {
      add_abbreviation(std::move(form));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
}

std::vector<Token> tokenize(std::u32string_view text,
                            const TokenizerConfig& config) {
  return Scanner(text, config, config.longest_abbreviation()).run();
}

std::u32string detokenize(std::span<const Token> tokens,
                          std::u32string_view original) {
  check_spans(tokens, original.size());
  for (const Token& t : tokens) {
    if (original.substr(t.span.start, t.span.size()) != t.text) {
      throw CorruptTokensError("token text does not match span [" +
                               std::to_string(t.span.start) + ", " +
                               std::to_string(t.span.end) + ")");
    }
  }
  return splice(tokens, original);
}

std::u32string splice(std::span<const Token> tokens,
                      std::u32string_view original) {
  check_spans(tokens, original.size());
  std::u32string out;
  out.reserve(original.size());
  std::size_t cursor = 0;
  for (const Token& t : tokens) {
    out.append(original.substr(cursor, t.span.start - cursor));
    out += t.text;
    cursor = t.span.end;
  }
  out.append(original.substr(cursor));
  return out;
}

}  // namespace farsi
