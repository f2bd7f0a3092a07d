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

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "embedded_data.hpp"
#include "farsi/charset.hpp"
#include "farsi/error.hpp"
#include "farsi/utf8.hpp"

namespace farsi {

struct MappingTable::Index {
  std::vector<Entry> entries;
  std::string provenance;
  std::unordered_map<char32_t, std::uint32_t> position;
  // One bit per BMP code point; lets the hot path skip the hash lookup.
  std::vector<std::uint64_t> bmp_sources = std::vector<std::uint64_t>(1024, 0);
  bool one_to_one = true;
};

namespace {

constexpr std::string_view kProvenanceTag = "provenance:";

bool valid_scalar(unsigned long v) {
  return v <= 0x10FFFF && (v < 0xD800 || v > 0xDFFF);
}

char32_t parse_hex(const std::string& token, std::size_t line) {
  if (token.empty() || token.size() > 6) {
    throw ParseError(line, "bad code point '" + token + "'");
  }
  for (char c : token) {
    const bool hex = (c >= '0' && c <= '9') || (c >= 'A' && c <= 'F') ||
                     (c >= 'a' && c <= 'f');
    if (!hex) throw ParseError(line, "bad code point '" + token + "'");
  }
  const unsigned long v = std::stoul(token, nullptr, 16);
  if (!valid_scalar(v)) {
    throw ParseError(line, "not a Unicode scalar value '" + token + "'");
  }
  return static_cast<char32_t>(v);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Checks the table invariants incrementally so the loader can point at the
// entry that breaks them. Returns an empty string when `entry` is acceptable.
class InvariantChecker {
 public:
  std::string add(const MappingTable::Entry& entry) {
    if (entry.replacement.empty()) return "empty replacement";
    if (sources_.count(entry.source)) {
      return "duplicate source " + utf8::to_hex({&entry.source, 1});
    }
    if (targets_.count(entry.source)) {
      return "cascade: source " + utf8::to_hex({&entry.source, 1}) +
             " appears in an earlier replacement";
    }
    for (char32_t cp : entry.replacement) {
      if (cp == entry.source || sources_.count(cp)) {
        return "cascade: replacement contains source " + utf8::to_hex({&cp, 1});
      }
    }
    sources_.insert(entry.source);
    targets_.insert(entry.replacement.begin(), entry.replacement.end());
    return {};
  }

 private:
  std::unordered_set<char32_t> sources_;
  std::unordered_set<char32_t> targets_;
};

MappingTable load_embedded(std::string_view data, std::string provenance) {
  std::istringstream in{std::string(data)};
  return load_mapping_table(in, std::move(provenance));
}

}  // namespace

MappingTable::MappingTable() {
  static const auto empty = std::make_shared<const Index>();
  index_ = empty;
}

MappingTable::MappingTable(std::vector<Entry> entries, std::string provenance) {
  InvariantChecker checker;
  auto index = std::make_shared<Index>();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    if (!valid_scalar(e.source)) throw std::invalid_argument("invalid source");
    if (auto err = checker.add(e); !err.empty()) throw std::invalid_argument(err);
    index->position.emplace(e.source, static_cast<std::uint32_t>(i));
    if (e.source < 0x10000) index->bmp_sources[e.source >> 6] |= 1ull << (e.source & 63);
    if (e.replacement.size() != 1) index->one_to_one = false;
  }
  index->entries = std::move(entries);
  index->provenance = std::move(provenance);
  index_ = std::move(index);
}

const std::vector<MappingTable::Entry>& MappingTable::entries() const noexcept {
  return index_->entries;
}

const std::string& MappingTable::provenance() const noexcept {
  return index_->provenance;
}

std::size_t MappingTable::size() const noexcept { return index_->entries.size(); }

bool MappingTable::empty() const noexcept { return index_->entries.empty(); }

bool MappingTable::is_one_to_one() const noexcept { return index_->one_to_one; }

const std::u32string* MappingTable::find(char32_t cp) const noexcept {
  const Index& index = *index_;
  if (cp < 0x10000 && !(index.bmp_sources[cp >> 6] & (1ull << (cp & 63)))) {
    return nullptr;
  }
  const auto it = index.position.find(cp);
  if (it == index.position.end()) return nullptr;
  return &index.entries[it->second].replacement;
}

bool operator==(const MappingTable& a, const MappingTable& b) {
  return a.entries() == b.entries();
}

const MappingTable& default_mapping_table() {
  static const MappingTable table =
      load_embedded(embedded::kBaseMapping, "default");
  return table;
}

const MappingTable& extended_mapping_table() {
  static const MappingTable table = [] {
    std::vector<MappingTable::Entry> entries = default_mapping_table().entries();
    const MappingTable forms =
        load_embedded(embedded::kPresentationForms, "presentation-forms");
    entries.insert(entries.end(), forms.entries().begin(), forms.entries().end());
    return MappingTable(std::move(entries), "extended");
  }();
  return table;
}

MappingTable load_mapping_table(std::istream& in, std::string provenance) {
  InvariantChecker checker;
  std::vector<MappingTable::Entry> entries;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      const std::string_view comment = trim(line.substr(hash + 1));
      if (comment.starts_with(kProvenanceTag)) {
        provenance = std::string(trim(comment.substr(kProvenanceTag.size())));
      }
      line = line.substr(0, hash);
    }
    std::istringstream fields{std::string(line)};
    std::string token;
    if (!(fields >> token)) continue;
    MappingTable::Entry entry;
    entry.source = parse_hex(token, line_no);
    while (fields >> token) entry.replacement.push_back(parse_hex(token, line_no));
    if (entry.replacement.empty()) {
      throw ParseError(line_no, "missing replacement for " + token);
    }
    if (auto err = checker.add(entry); !err.empty()) throw ParseError(line_no, err);
    entries.push_back(std::move(entry));
  }
  if (in.bad()) throw ParseError(line_no, "read error");
  return MappingTable(std::move(entries), std::move(provenance));
}

MappingTable load_mapping_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open mapping table " + path.string());
  return load_mapping_table(in, path.filename().string());
}

std::string serialize_mapping_table(const MappingTable& table) {
  std::string out;
  if (!table.provenance().empty()) {
    out += "# provenance: " + table.provenance() + "\n";
  }
  for (const auto& e : table.entries()) {
    out += utf8::to_hex({&e.source, 1});
    out += ' ';
    out += utf8::to_hex(e.replacement);
    out += '\n';
  }
  return out;
}

}  // namespace farsi
