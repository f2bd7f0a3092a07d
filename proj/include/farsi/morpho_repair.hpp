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

#ifndef FARSI_MORPHO_REPAIR_HPP_
#define FARSI_MORPHO_REPAIR_HPP_

// Affix boundary repair. Bound morphemes written as separate words are joined
// to their stems with a ZWNJ; optionally, attached suffixes whose stem is a
// known word are split off with a ZWNJ. Everything is driven by an explicit
// lexicon, never by guessing at morphology.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "farsi/tokenizer.hpp"

namespace farsi {

enum class AffixSide { Prefix, Suffix, Word };
enum class AffixJoin { Zwnj, Separate };

struct AffixEntry {
  std::u32string form;
  AffixSide side = AffixSide::Suffix;
  AffixJoin join = AffixJoin::Zwnj;

  friend bool operator==(const AffixEntry&, const AffixEntry&) = default;
};

class AffixLexicon {
 public:
  // Throws std::invalid_argument when the form is empty, contains a space or
  // a ZWNJ, or is already listed with a different join value. Entries with
  // side Word are free words: they never merge and never host an affix.
  void add(AffixEntry entry);

  // A word that never takes an affix.
  void add_stem_exception(std::u32string word);

  const std::vector<AffixEntry>& entries() const noexcept { return entries_; }
  const std::unordered_set<std::u32string>& stem_exceptions() const noexcept {
    return stem_exceptions_;
  }

  bool is_suffix(std::u32string_view form) const;
  bool is_prefix(std::u32string_view form) const;
  // Any listed form, whatever its side or join value.
  bool is_listed(std::u32string_view form) const;
  bool is_stem_exception(std::u32string_view word) const;

  // Suffix/ZWNJ forms, longest first.
  const std::vector<std::u32string>& suffixes() const noexcept { return suffixes_; }
  const std::vector<std::u32string>& prefixes() const noexcept { return prefixes_; }

 private:
  std::vector<AffixEntry> entries_;
  std::map<std::u32string, AffixJoin, std::less<>> joins_;
  std::vector<std::u32string> suffixes_;
  std::vector<std::u32string> prefixes_;
  std::unordered_set<std::u32string> stem_exceptions_;
};

// Plural ها/های/هایی, comparative تر/ترین, verbal prefixes می/نمی, and the
// free words به/را/که.
AffixLexicon default_affix_lexicon();

// `FORM TAB SIDE TAB JOIN` per line, SIDE in {prefix, suffix, word}, JOIN in
// {zwnj, separate}; `#` comments. Throws ParseError.
AffixLexicon load_affix_lexicon(std::istream& in);
AffixLexicon load_affix_lexicon(const std::filesystem::path& path);

using WordSet = std::unordered_set<std::u32string>;

// One word per line, `#` comments. Throws ParseError.
WordSet load_word_list(std::istream& in);
WordSet load_word_list(const std::filesystem::path& path);

// A join between input tokens `left` and `left + 1`; `affix` says which of
// the two is the bound morpheme.
struct AffixJoinPoint {
  std::size_t left = 0;
  AffixSide affix = AffixSide::Suffix;

  friend bool operator==(const AffixJoinPoint&, const AffixJoinPoint&) = default;
};

// The joins repair_affixes() performs, in order. Joining is a single
// left-to-right pass; a word already carrying a ZWNJ-joined suffix (prefix)
// takes no further suffix (prefix).
std::vector<AffixJoinPoint> plan_affix_joins(std::span<const Token> tokens,
                                             const AffixLexicon& lexicon);

// Merges each space-separated affix into its neighbor with exactly one ZWNJ
// at the join. Merged spans cover both originals.
std::vector<Token> repair_affixes(std::span<const Token> tokens,
                                  const AffixLexicon& lexicon);

// Offset within `token.text` at which split_attached() inserts a ZWNJ, if it
// splits the token at all.
std::optional<std::size_t> attached_split_point(const Token& token,
                                                const AffixLexicon& lexicon,
                                                const WordSet& known_words);

// Rewrites a word ending in a suffix as stem + ZWNJ + suffix, but only when
// the stem is a known word.
std::vector<Token> split_attached(std::span<const Token> tokens,
                                  const AffixLexicon& lexicon,
                                  const WordSet& known_words);

}  // namespace farsi

#endif  // FARSI_MORPHO_REPAIR_HPP_
