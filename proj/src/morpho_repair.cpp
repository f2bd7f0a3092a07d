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

#include "farsi/morpho_repair.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <stdexcept>

#include "farsi/charset.hpp"
#include "farsi/error.hpp"
#include "farsi/normalizer.hpp"
#include "farsi/utf8.hpp"

namespace farsi {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::u32string decode_field(std::string_view field, std::size_t line_no) {
  try {
    return utf8::decode(field);
  } catch (const utf8::DecodeError&) {
    throw ParseError(line_no, "invalid UTF-8");
  }
}

void insert_by_length(std::vector<std::u32string>& forms, const std::u32string& form) {
  if (std::find(forms.begin(), forms.end(), form) != forms.end()) return;
  forms.push_back(form);
  std::stable_sort(forms.begin(), forms.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
}

bool contains_full_stop(std::u32string_view text) {
  return text.find(U'.') != std::u32string_view::npos ||
         text.find(U'\u06D4') != std::u32string_view::npos;
}

class Joiner {
 public:
  explicit Joiner(const AffixLexicon& lexicon) : lexicon_(lexicon) {}

  std::vector<Token> run(std::span<const Token> tokens,
                         std::vector<AffixJoinPoint>* joins) const {
    std::vector<Token> out;
    out.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      if (is_affix(t, AffixSide::Suffix) && !out.empty() && can_host(out.back()) &&
          !suffix_taken(out.back().text)) {
        Token& host = out.back();
        host.text.push_back(kZwnj);
        host.text += t.text;
        host.span.end = t.span.end;
        if (joins) joins->push_back({i - 1, AffixSide::Suffix});
        continue;
      }
      if (is_affix(t, AffixSide::Prefix) && i + 1 < tokens.size() &&
          can_host(tokens[i + 1]) && !prefix_taken(tokens[i + 1].text)) {
        const Token& host = tokens[i + 1];
        Token merged{t.text, {t.span.start, host.span.end}, TokenKind::Word};
        merged.text.push_back(kZwnj);
        merged.text += host.text;
        out.push_back(std::move(merged));
        if (joins) joins->push_back({i, AffixSide::Prefix});
        ++i;
        continue;
      }
      out.push_back(t);
    }
    return out;
  }

 private:
  bool is_affix(const Token& t, AffixSide side) const {
    if (t.kind != TokenKind::Word) return false;
    return side == AffixSide::Suffix ? lexicon_.is_suffix(t.text)
                                     : lexicon_.is_prefix(t.text);
  }

  bool can_host(const Token& t) const {
    return t.kind == TokenKind::Word && !t.text.empty() &&
           t.text.front() != kZwnj && t.text.back() != kZwnj &&
           !lexicon_.is_listed(t.text) && !lexicon_.is_stem_exception(t.text) &&
           !contains_full_stop(t.text);
  }

  // A word ends in a suffix that is already joined: behind a ZWNJ, or behind
  // a letter that does not join forward (where the ZWNJ is dropped).
  bool suffix_taken(std::u32string_view text) const {
    for (const auto& f : lexicon_.suffixes()) {
      if (text.size() <= f.size() || !text.ends_with(f)) continue;
      const std::u32string_view stem = text.substr(0, text.size() - f.size());
      if (stem.back() == kZwnj || !zwnj_breaks_join(stem)) return true;
    }
    return false;
  }

  bool prefix_taken(std::u32string_view text) const {
    for (const auto& p : lexicon_.prefixes()) {
      if (text.size() <= p.size() || !text.starts_with(p)) continue;
      if (text[p.size()] == kZwnj || !zwnj_breaks_join(p)) return true;
    }
    return false;
  }

  const AffixLexicon& lexicon_;
};

}  // namespace

void AffixLexicon::add(AffixEntry entry) {
  const std::u32string& form = entry.form;
  if (form.empty()) throw std::invalid_argument("empty affix form");
  for (char32_t cp : form) {
    if (cp == kZwnj || classify(cp) == CharClass::Space) {
      throw std::invalid_argument("affix form contains a space or ZWNJ");
    }
  }
  if (entry.side == AffixSide::Word && entry.join != AffixJoin::Separate) {
    throw std::invalid_argument("word entries must be separate");
  }
  if (const auto it = joins_.find(form); it != joins_.end()) {
    if (it->second != entry.join) {
      throw std::invalid_argument("affix form listed with two join values");
    }
  } else {
    joins_.emplace(form, entry.join);
  }
  if (std::find(entries_.begin(), entries_.end(), entry) != entries_.end()) return;
  if (entry.join == AffixJoin::Zwnj) {
    insert_by_length(entry.side == AffixSide::Suffix ? suffixes_ : prefixes_, form);
  }
  if (entry.side == AffixSide::Word) stem_exceptions_.insert(form);
  entries_.push_back(std::move(entry));
}

void AffixLexicon::add_stem_exception(std::u32string word) {
  stem_exceptions_.insert(std::move(word));
}

bool AffixLexicon::is_suffix(std::u32string_view form) const {
  return std::find(suffixes_.begin(), suffixes_.end(), form) != suffixes_.end();
}

bool AffixLexicon::is_prefix(std::u32string_view form) const {
  return std::find(prefixes_.begin(), prefixes_.end(), form) != prefixes_.end();
}

bool AffixLexicon::is_listed(std::u32string_view form) const {
  return joins_.find(form) != joins_.end();
}

bool AffixLexicon::is_stem_exception(std::u32string_view word) const {
  return stem_exceptions_.count(std::u32string(word)) > 0;
}

AffixLexicon default_affix_lexicon() {
  AffixLexicon lexicon;
  for (const char32_t* s : {U"ها", U"های", U"هایی", U"تر", U"ترین"}) {
    lexicon.add({s, AffixSide::Suffix, AffixJoin::Zwnj});
  }
  for (const char32_t* p : {U"می", U"نمی"}) {
    lexicon.add({p, AffixSide::Prefix, AffixJoin::Zwnj});
  }
  for (const char32_t* w : {U"به", U"را", U"که"}) {
    lexicon.add({w, AffixSide::Word, AffixJoin::Separate});
  }
  return lexicon;
}

AffixLexicon load_affix_lexicon(std::istream& in) {
  AffixLexicon lexicon;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    line = line.substr(0, line.find('#'));
    if (trim(line).empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(trim(line.substr(start, tab - start)));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 3) {
      throw ParseError(line_no, "expected FORM<TAB>SIDE<TAB>JOIN");
    }
    AffixEntry entry;
    entry.form = decode_field(fields[0], line_no);
    if (fields[1] == "prefix") {
      entry.side = AffixSide::Prefix;
    } else if (fields[1] == "suffix") {
      entry.side = AffixSide::Suffix;
    } else if (fields[1] == "word") {
      entry.side = AffixSide::Word;
    } else {
      throw ParseError(line_no, "unknown side '" + std::string(fields[1]) + "'");
    }
    if (fields[2] == "zwnj") {
      entry.join = AffixJoin::Zwnj;
    } else if (fields[2] == "separate") {
      entry.join = AffixJoin::Separate;
    } else {
      throw ParseError(line_no, "unknown join '" + std::string(fields[2]) + "'");
    }
    try {
      lexicon.add(std::move(entry));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return lexicon;
}

AffixLexicon load_affix_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open affix lexicon " + path.string());
  return load_affix_lexicon(in);
}

WordSet load_word_list(std::istream& in) {
  WordSet words;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    line = trim(line.substr(0, line.find('#')));
    if (!line.empty()) words.insert(decode_field(line, line_no));
  }
  return words;
}

WordSet load_word_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open word list " + path.string());
  return load_word_list(in);
}

std::vector<AffixJoinPoint> plan_affix_joins(std::span<const Token> tokens,
                                             const AffixLexicon& lexicon) {
  std::vector<AffixJoinPoint> joins;
  Joiner(lexicon).run(tokens, &joins);
  return joins;
}

std::vector<Token> repair_affixes(std::span<const Token> tokens,
                                  const AffixLexicon& lexicon) {
  return Joiner(lexicon).run(tokens, nullptr);
}

std::optional<std::size_t> attached_split_point(const Token& token,
                                                const AffixLexicon& lexicon,
                                                const WordSet& known_words) {
  if (token.kind != TokenKind::Word) return std::nullopt;
  const std::u32string_view text = token.text;
  for (const auto& f : lexicon.suffixes()) {
    if (text.size() <= f.size() || !text.ends_with(f)) continue;
    const std::u32string_view stem = text.substr(0, text.size() - f.size());
    if (stem.back() == kZwnj) continue;
    if (known_words.count(std::u32string(stem))) return stem.size();
  }
  return std::nullopt;
}

std::vector<Token> split_attached(std::span<const Token> tokens,
                                  const AffixLexicon& lexicon,
                                  const WordSet& known_words) {
  std::vector<Token> out(tokens.begin(), tokens.end());
  for (Token& t : out) {
    if (const auto at = attached_split_point(t, lexicon, known_words)) {
      t.text.insert(t.text.begin() + static_cast<std::ptrdiff_t>(*at), kZwnj);
    }
  }
  return out;
}

}  // namespace farsi
