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

#include <gtest/gtest.h>

#include <sstream>

#include "farsi/error.hpp"

namespace farsi {
namespace {

using Shape = std::vector<std::pair<TokenKind, std::u32string>>;

Shape shape(const std::vector<Token>& tokens) {
  Shape out;
  for (const Token& t : tokens) out.emplace_back(t.kind, t.text);
  return out;
}

Shape tok(std::u32string_view text, const TokenizerConfig& config = {}) {
  return shape(tokenize(text, config));
}

constexpr TokenKind W = TokenKind::Word;
constexpr TokenKind N = TokenKind::Number;
constexpr TokenKind P = TokenKind::Punct;
constexpr TokenKind S = TokenKind::Symbol;

TEST(Tokenize, ZwnjStaysInsideWords) {
  EXPECT_EQ(tok(U"کتاب\u200Cها رفت"), (Shape{{W, U"کتاب\u200Cها"}, {W, U"رفت"}}));
}

TEST(Tokenize, FullStopSplits) {
  EXPECT_EQ(tok(U"او رفت."), (Shape{{W, U"او"}, {W, U"رفت"}, {P, U"."}}));
  EXPECT_EQ(tok(U"رفت۔"), (Shape{{W, U"رفت"}, {P, U"۔"}}));
}

TEST(Tokenize, DatesStayWhole) {
  EXPECT_EQ(tok(U"۱۳۸۴/۱۲/۲"), (Shape{{N, U"۱۳۸۴/۱۲/۲"}}));
  EXPECT_EQ(tok(U"۳٫۵ و ۱٬۰۰۰"), (Shape{{N, U"۳٫۵"}, {W, U"و"}, {N, U"۱٬۰۰۰"}}));
}

TEST(Tokenize, SlashBetweenLettersIsPunct) {
  EXPECT_EQ(tok(U"این/آن"), (Shape{{W, U"این"}, {P, U"/"}, {W, U"آن"}}));
  EXPECT_EQ(tok(U"۱۲/"), (Shape{{N, U"۱۲"}, {P, U"/"}}));
}

TEST(Tokenize, Empty) {
  EXPECT_TRUE(tokenize(U"").empty());
  EXPECT_TRUE(tokenize(U"   \t ").empty());
}

TEST(Tokenize, FreeWordsStaySeparate) {
  const Shape s = tok(U"به خانه که رفت");
  ASSERT_EQ(s.size(), 4u);
  for (const auto& [kind, text] : s) EXPECT_EQ(kind, W);
}

TEST(Tokenize, UnambiguousPunctuation) {
  EXPECT_EQ(tok(U"«سلام»، چرا؟ (نه): بله?"),
            (Shape{{P, U"«"}, {W, U"سلام"}, {P, U"»"}, {P, U"،"}, {W, U"چرا"}, {P, U"؟"},
                   {P, U"("}, {W, U"نه"}, {P, U")"}, {P, U":"}, {W, U"بله"}, {P, U"?"}}));
}

TEST(Tokenize, DashCompounds) {
  EXPECT_EQ(tok(U"ایران-عراق"), (Shape{{W, U"ایران-عراق"}}));
  TokenizerConfig off;
  off.set_join_dash_compounds(false);
  EXPECT_EQ(tok(U"ایران-عراق", off), (Shape{{W, U"ایران"}, {P, U"-"}, {W, U"عراق"}}));
  EXPECT_EQ(tok(U"-ایران"), (Shape{{P, U"-"}, {W, U"ایران"}}));
  EXPECT_EQ(tok(U"۱-۲"), (Shape{{N, U"۱"}, {P, U"-"}, {N, U"۲"}}));
}

TEST(Tokenize, Abbreviations) {
  TokenizerConfig config;
  config.add_abbreviation(U"ق.م");
  config.add_abbreviation(U"ه.ش.");
  EXPECT_EQ(tok(U"سال ۵۰ ق.م بود.", config),
            (Shape{{W, U"سال"}, {N, U"۵۰"}, {W, U"ق.م"}, {W, U"بود"}, {P, U"."}}));
  EXPECT_EQ(tok(U"۱۳۸۴ ه.ش.", config), (Shape{{N, U"۱۳۸۴"}, {W, U"ه.ش."}}));
  // Not at a word boundary, so not the abbreviation.
  EXPECT_EQ(tok(U"ق.مم", config), (Shape{{W, U"ق"}, {P, U"."}, {W, U"مم"}}));
  // Without the list the full stop splits.
  EXPECT_EQ(tok(U"ق.م"), (Shape{{W, U"ق"}, {P, U"."}, {W, U"م"}}));
}

TEST(TokenizerConfig, AbbreviationsNeedAFullStop) {
  TokenizerConfig config;
  EXPECT_THROW(config.add_abbreviation(U""), std::invalid_argument);
  EXPECT_THROW(config.add_abbreviation(U"قم"), std::invalid_argument);
  EXPECT_NO_THROW(config.add_abbreviation(U"ق۔م"));
  EXPECT_EQ(config.longest_abbreviation(), 3u);
}

TEST(TokenizerConfig, LoadList) {
  TokenizerConfig config;
  std::istringstream in("# list\nق.م\n\nه.ش.\n");
  config.add_abbreviations(in);
  EXPECT_EQ(config.abbreviations().size(), 2u);
  std::istringstream bad("ق.م\nقم\n");
  try {
    config.add_abbreviations(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Tokenize, StrayJoinersAndSymbols) {
  EXPECT_EQ(tok(U"\u200C کتاب"), (Shape{{S, U"\u200C"}, {W, U"کتاب"}}));
  EXPECT_EQ(tok(U"کتاب\u200C"), (Shape{{W, U"کتاب"}, {S, U"\u200C"}}));
  EXPECT_EQ(tok(U"۵٪ $"), (Shape{{N, U"۵"}, {P, U"٪"}, {S, U"$"}}));
}

TEST(Tokenize, DiacriticsStayInWords) {
  EXPECT_EQ(tok(U"ب\u064Eبر"), (Shape{{W, U"ب\u064Eبر"}}));
}

TEST(Tokenize, SpansIndexTheInput) {
  const std::u32string text = U"  او  رفت.";
  const auto tokens = tokenize(text);
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].span, (Span{2, 4}));
  EXPECT_EQ(tokens[1].span, (Span{6, 9}));
  EXPECT_EQ(tokens[2].span, (Span{9, 10}));
}

TEST(Detokenize, RoundTrip) {
  const std::u32string text = U"او رفت.";
  EXPECT_EQ(detokenize(tokenize(text), text), text);
  EXPECT_EQ(detokenize(std::vector<Token>{}, U""), U"");
}

TEST(Detokenize, RejectsCorruptLists) {
  const std::u32string text = U"او رفت.";
  auto tokens = tokenize(text);
  auto overlapping = tokens;
  overlapping[1].span.start = 1;
  overlapping[1].text = text.substr(1, overlapping[1].span.size());
  EXPECT_THROW(detokenize(overlapping, text), CorruptTokensError);
  auto out_of_range = tokens;
  out_of_range.back().span.end = 99;
  EXPECT_THROW(detokenize(out_of_range, text), CorruptTokensError);
  auto wrong_text = tokens;
  wrong_text[0].text = U"تو";
  EXPECT_THROW(detokenize(wrong_text, text), CorruptTokensError);
  EXPECT_NO_THROW(splice(wrong_text, text));
  EXPECT_EQ(splice(wrong_text, text), U"تو رفت.");
}

}  // namespace
}  // namespace farsi
