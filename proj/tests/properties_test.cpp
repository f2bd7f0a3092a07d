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

// Randomized properties over seeded generators. Each test states the property
// it checks; failures print the input as hex.

#include <gtest/gtest.h>

#include <random>

#include "farsi/conformance.hpp"
#include "farsi/pipeline.hpp"
#include "farsi/utf8.hpp"
#include "support/generators.hpp"

namespace farsi {
namespace {

constexpr int kCases = 5000;

std::u32string sample(std::mt19937_64& rng, int i) {
  switch (i % 3) {
    case 0: return testing::random_text(rng, testing::interesting_code_points(), 24);
    case 1: return testing::random_text(rng, testing::arabic_block_with_controls(), 24);
    default: return testing::random_sentence(rng, 8);
  }
}

bool is_letter(char32_t c) {
  const CharClass k = classify(c);
  return k == CharClass::FarsiLetter || k == CharClass::ArabicVariantLetter;
}

std::u32string letters_of(std::u32string_view s) {
  std::u32string out;
  for (char32_t c : s) {
    if (is_letter(c)) out.push_back(c);
  }
  return out;
}

TEST(NormalizeProperty, Idempotent) {
  std::mt19937_64 rng(101);
  NormalizationConfig extended;
  extended.mapping = extended_mapping_table();
  NormalizationConfig preserve;
  preserve.unify_digits = DigitMode::Preserve;
  for (int i = 0; i < kCases; ++i) {
    const std::u32string s = sample(rng, i);
    for (const NormalizationConfig* c : {&extended, &preserve}) {
      const std::u32string once = normalize(s, *c);
      ASSERT_EQ(normalize(once, *c), once) << utf8::to_hex(s);
    }
    const std::u32string once = normalize(s);
    ASSERT_EQ(normalize(once), once) << utf8::to_hex(s);
  }
}

TEST(NormalizeProperty, SkeletonPreserved) {
  // The letters of the output are the mapped letters of the input.
  std::mt19937_64 rng(102);
  for (int i = 0; i < kCases; ++i) {
    const std::u32string s = sample(rng, i);
    std::u32string expected;
    for (char32_t c : letters_of(s)) {
      const std::u32string* r = default_mapping_table().find(c);
      expected += r ? *r : std::u32string(1, c);
    }
    ASSERT_EQ(letters_of(normalize(s)), expected) << utf8::to_hex(s);
  }
}

TEST(NormalizeProperty, OrderPreserved) {
  // With mapping off, the output is a subsequence of the input.
  std::mt19937_64 rng(103);
  NormalizationConfig c;
  c.map_variants = false;
  c.unify_digits = DigitMode::Preserve;
  for (int i = 0; i < kCases; ++i) {
    const std::u32string s = sample(rng, i);
    const std::u32string out = normalize(s, c);
    std::size_t k = 0;
    for (char32_t ch : s) {
      if (k < out.size() && out[k] == ch) ++k;
    }
    ASSERT_EQ(k, out.size()) << utf8::to_hex(s);
  }
}

TEST(NormalizeProperty, OneToOneTableKeepsLength) {
  std::mt19937_64 rng(104);
  NormalizationConfig c;
  c.remove_tatweel = false;
  c.strip_diacritics = false;
  c.fix_zwnj = false;
  for (int i = 0; i < kCases; ++i) {
    const std::u32string s = sample(rng, i);
    ASSERT_EQ(normalize(s, c).size(), s.size()) << utf8::to_hex(s);
  }
}

TEST(NormalizeProperty, FusedEqualsStagedComposition) {
  std::mt19937_64 rng(105);
  for (int i = 0; i < kCases; ++i) {
    const std::u32string s = sample(rng, i);
    const std::u32string staged =
        fix_zwnj(unify_digits(strip_diacritics(remove_tatweel(
                                  map_characters(s, default_mapping_table()))),
                              DigitMode::Persian));
    ASSERT_EQ(normalize(s), staged) << utf8::to_hex(s);
  }
}

TEST(TokenizeProperty, CoverageAndRoundTrip) {
  std::mt19937_64 rng(106);
  for (int i = 0; i < kCases; ++i) {
    const std::u32string s = sample(rng, i);
    const std::vector<Token> tokens = tokenize(s);
    ASSERT_EQ(detokenize(tokens, s), s) << utf8::to_hex(s);
    std::vector<int> owner(s.size(), 0);
    std::size_t last_end = 0;
    for (const Token& t : tokens) {
      ASSERT_LT(t.span.start, t.span.end);
      ASSERT_GE(t.span.start, last_end);
      last_end = t.span.end;
      for (std::size_t k = t.span.start; k < t.span.end; ++k) ++owner[k];
      if (t.kind == TokenKind::Word) {
        ASSERT_NE(t.text.front(), kZwnj) << utf8::to_hex(s);
        ASSERT_NE(t.text.back(), kZwnj) << utf8::to_hex(s);
      }
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
      const bool space = classify(s[k]) == CharClass::Space;
      ASSERT_EQ(owner[k], space ? 0 : 1) << utf8::to_hex(s) << " at " << k;
    }
  }
}

TEST(TokenizeProperty, NoGlyphFormDependence) {
  // Prepending a dual-joining letter to a word changes the contextual form of
  // the word's first letter but must not move any boundary.
  std::mt19937_64 rng(107);
  for (int i = 0; i < kCases; ++i) {
    const std::u32string s = testing::random_sentence(rng, 6);
    const std::vector<Token> base = tokenize(s);
    for (std::size_t w = 0; w < base.size(); ++w) {
      if (base[w].kind != TokenKind::Word) continue;
      std::u32string shifted = s;
      shifted.insert(base[w].span.start, 1, U'ب');
      const std::vector<Token> after = tokenize(shifted);
      ASSERT_EQ(after.size(), base.size()) << utf8::to_hex(shifted);
      for (std::size_t k = 0; k < base.size(); ++k) {
        const std::size_t shift = k >= w ? 1 : 0;
        const std::size_t start_shift = k > w ? 1 : 0;
        ASSERT_EQ(after[k].span.start, base[k].span.start + start_shift);
        ASSERT_EQ(after[k].span.end, base[k].span.end + shift);
      }
    }
  }
}

TEST(RepairProperty, LettersCountAndIdempotence) {
  std::mt19937_64 rng(108);
  const AffixLexicon lexicon = default_affix_lexicon();
  const auto strip = [](std::u32string_view s) {
    std::u32string out;
    for (char32_t c : s) {
      if (classify(c) != CharClass::Space && c != kZwnj) out.push_back(c);
    }
    return out;
  };
  for (int i = 0; i < kCases; ++i) {
    const std::u32string s = normalize(testing::random_sentence(rng, 8));
    const std::vector<Token> tokens = tokenize(s);
    const std::vector<Token> repaired = repair_affixes(tokens, lexicon);
    const auto joins = plan_affix_joins(tokens, lexicon);
    ASSERT_EQ(repaired.size(), tokens.size() - joins.size());
    std::u32string before, after;
    for (const Token& t : tokens) before += strip(t.text);
    for (const Token& t : repaired) after += strip(t.text);
    ASSERT_EQ(before, after) << utf8::to_hex(s);
    const std::u32string once = fix_zwnj(splice(repaired, s));
    const std::u32string twice = fix_zwnj(splice(repair_affixes(tokenize(once), lexicon), once));
    ASSERT_EQ(once, twice) << utf8::to_hex(s);
  }
}

TEST(StandardizeProperty, Idempotent) {
  std::mt19937_64 rng(109);
  PipelineConfig split;
  split.split_attached = true;
  split.known_words = {U"کتاب", U"خانه", U"مو", U"تن"};
  PipelineConfig plain;
  for (int i = 0; i < kCases; ++i) {
    const std::u32string s = sample(rng, i);
    for (const PipelineConfig* c : {&split, &plain}) {
      const std::u32string once = standardize(s, *c);
      ASSERT_EQ(standardize(once, *c), once) << utf8::to_hex(s);
    }
  }
}

TEST(CheckProperty, SoundAndCompleteByFix) {
  std::mt19937_64 rng(110);
  PipelineConfig split;
  split.split_attached = true;
  split.known_words = {U"کتاب", U"خانه", U"مو", U"تن"};
  NormalizationConfig keep;
  keep.strip_diacritics = false;
  keep.remove_tatweel = false;
  PipelineConfig kept;
  kept.normalization = keep;
  PipelineConfig plain;
  for (int i = 0; i < kCases; ++i) {
    const std::u32string s = sample(rng, i);
    for (const PipelineConfig* c : {&plain, &split, &kept}) {
      const std::u32string fixed = standardize(s, *c);
      const Report r = check(s, *c);
      ASSERT_EQ(apply_fixes(s, r), fixed) << utf8::to_hex(s);
      ASSERT_TRUE(check(fixed, *c).empty()) << utf8::to_hex(s);
      ASSERT_EQ(r.empty(), fixed == s) << utf8::to_hex(s);
    }
  }
}

}  // namespace
}  // namespace farsi
