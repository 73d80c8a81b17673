// core/src/lexicon.cpp
//
// Copyright 2026  ctxbias authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "ctxbias/lexicon.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <ostream>

#include "ctxbias/error.hpp"
#include "ctxbias/text.hpp"

namespace ctxbias {
namespace {

constexpr std::array<const char*, 24> kArpabetConsonants = {
    "B",  "CH", "D", "DH", "F", "G", "HH", "JH", "K", "L",  "M",  "N",
    "NG", "P",  "R", "S",  "SH", "T", "TH", "V", "W", "Y",  "Z",  "ZH"};
constexpr std::array<const char*, 15> kArpabetVowels = {
    "AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER",
    "EY", "IH", "IY", "OW", "OY", "UH", "UW"};

constexpr std::array<const char*, 23> kPinyinInitials = {
    "b", "p", "m", "f", "d", "t", "n", "l", "g", "k", "h", "j",
    "q", "x", "zh", "ch", "sh", "r", "z", "c", "s", "y", "w"};
constexpr std::array<const char*, 37> kPinyinFinals = {
    "a",  "o",  "e",   "i",   "u",    "v",   "ai",  "ei",  "ao",  "ou",
    "an", "en", "ang", "eng", "ong",  "er",  "ia",  "ie",  "iao", "iu",
    "ian", "in", "iang", "ing", "iong", "ua", "uo",  "uai", "ui",  "uan",
    "un", "uang", "ueng", "ue", "ve",  "van", "vn"};

std::set<std::string> make_arpabet_symbols() {
  std::set<std::string> s;
  for (const char* c : kArpabetConsonants) s.insert(c);
  for (const char* v : kArpabetVowels)
    for (char stress : {'0', '1', '2'}) s.insert(std::string(v) + stress);
  return s;
}

std::set<std::string> make_pinyin_symbols() {
  std::set<std::string> s;
  for (char tone = '1'; tone <= '5'; ++tone) {
    for (const char* f : kPinyinFinals) {
      s.insert(std::string(f) + tone);
      for (const char* i : kPinyinInitials) s.insert(std::string(i) + f + tone);
    }
  }
  return s;
}

bool is_arpabet_vowel_base(std::string_view base) {
  for (const char* v : kArpabetVowels)
    if (base == v) return true;
  return false;
}

// Letter-to-sound rules for English OOV words: greedy longest match over the
// case-folded spelling; the first vowel gets stress 1, later vowels 0.
// Deliberately crude -- a deterministic stand-in for a trained G2P model.
struct LtsRule {
  const char* graphemes;
  const char* phones;  // space-separated, vowels without stress digit
};
constexpr std::array<LtsRule, 54> kLtsRules = {{
    {"eigh", "EY"}, {"ough", "AO"}, {"augh", "AO"}, {"tch", "CH"},
    {"igh", "AY"},  {"dge", "JH"},  {"ch", "CH"},   {"ck", "K"},
    {"sh", "SH"},   {"th", "TH"},   {"ph", "F"},    {"wh", "W"},
    {"qu", "K W"},  {"ng", "NG"},   {"ee", "IY"},   {"ea", "IY"},
    {"oo", "UW"},   {"ou", "AW"},   {"ow", "AW"},   {"ai", "EY"},
    {"ay", "EY"},   {"oa", "OW"},   {"oy", "OY"},   {"oi", "OY"},
    {"au", "AO"},   {"aw", "AO"},   {"ew", "UW"},   {"ey", "EY"},
    {"ie", "IY"},   {"ue", "UW"},   {"a", "AE"},    {"b", "B"},
    {"c", "K"},     {"d", "D"},     {"e", "EH"},    {"f", "F"},
    {"g", "G"},     {"h", "HH"},    {"i", "IH"},    {"j", "JH"},
    {"k", "K"},     {"l", "L"},     {"m", "M"},     {"n", "N"},
    {"o", "AA"},    {"p", "P"},     {"q", "K"},     {"r", "R"},
    {"s", "S"},     {"t", "T"},     {"u", "AH"},    {"v", "V"},
    {"w", "W"},     {"x", "K S"},
}};
// 'y' and 'z' handled separately so the table stays one rule per grapheme
// below digraph length.
constexpr LtsRule kLtsY = {"y", "IY"};
constexpr LtsRule kLtsZ = {"z", "Z"};

}  // namespace

const PhonemeInventory& PhonemeInventory::arpabet() {
  static const PhonemeInventory inv(InventoryId::kArpabetEN,
                                    make_arpabet_symbols());
  return inv;
}

const PhonemeInventory& PhonemeInventory::pinyin() {
  static const PhonemeInventory inv(InventoryId::kPinyinZH,
                                    make_pinyin_symbols());
  return inv;
}

const PhonemeInventory& PhonemeInventory::get(InventoryId id) {
  return id == InventoryId::kArpabetEN ? arpabet() : pinyin();
}

std::string PhonemeInventory::normalize(const std::string& symbol) const {
  if (id_ == InventoryId::kPinyinZH) return symbol;
  if (!symbol.empty() && symbol.back() >= '0' && symbol.back() <= '2' &&
      is_arpabet_vowel_base(
          std::string_view(symbol).substr(0, symbol.size() - 1)))
    return symbol.substr(0, symbol.size() - 1);
  return symbol;
}

std::string PhonemeSeq::to_string() const { return join(symbols, " "); }

RuleTable RuleTable::load(std::istream& in) {
  RuleTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t pos; (pos = line.find('\t', start)) != std::string::npos;
         start = pos + 1)
      fields.push_back(line.substr(start, pos - start));
    fields.push_back(line.substr(start));
    if (fields.size() != 3 || fields[1].empty())
      throw ParseError("expected `scope TAB lhs TAB rhs`", line_no);
    Scope scope;
    if (fields[0] == "anywhere")
      scope = Scope::kAnywhere;
    else if (fields[0] == "prefix")
      scope = Scope::kPrefix;
    else if (fields[0] == "suffix")
      scope = Scope::kSuffix;
    else
      throw ParseError("unknown scope '" + fields[0] + "'", line_no);
    table.rules_.push_back({scope, fields[1], fields[2]});
  }
  return table;
}

RuleTable RuleTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open rule table: " + path);
  return load(in);
}

std::set<std::string> RuleTable::alternatives(const std::string& word) const {
  std::set<std::string> out;
  auto apply = [&](const Rule& r, const std::string& lhs,
                   const std::string& rhs) {
    if (lhs.empty()) return;
    switch (r.scope) {
      case Scope::kAnywhere:
        for (std::size_t pos = word.find(lhs); pos != std::string::npos;
             pos = word.find(lhs, pos + 1)) {
          std::string candidate = word;
          candidate.replace(pos, lhs.size(), rhs);
          if (candidate != word && !candidate.empty()) out.insert(candidate);
        }
        break;
      case Scope::kPrefix:
        if (word.rfind(lhs, 0) == 0) {
          std::string candidate = rhs + word.substr(lhs.size());
          if (candidate != word && !candidate.empty()) out.insert(candidate);
        }
        break;
      case Scope::kSuffix:
        if (word.size() >= lhs.size() &&
            word.compare(word.size() - lhs.size(), lhs.size(), lhs) == 0) {
          std::string candidate = word.substr(0, word.size() - lhs.size()) + rhs;
          if (candidate != word && !candidate.empty()) out.insert(candidate);
        }
        break;
    }
  };
  for (const auto& r : rules_) {
    apply(r, r.lhs, r.rhs);
    apply(r, r.rhs, r.lhs);
  }
  return out;
}

Lexicon Lexicon::load(std::istream& source, const PhonemeInventory& inventory) {
  Lexicon lex(inventory);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw ParseError("expected `word TAB symbols`", line_no);
    const std::string word = line.substr(0, tab);
    if (word.find(' ') != std::string::npos)
      throw ParseError("word contains whitespace: '" + word + "'", line_no);
    PhonemeSeq seq;
    seq.symbols = split_whitespace(line.substr(tab + 1));
    if (seq.symbols.empty())
      throw ParseError("entry '" + word + "' has no symbols", line_no);
    for (const auto& sym : seq.symbols)
      if (!inventory.contains(sym)) throw UnknownSymbolError(word, sym, line_no);

    auto [it, inserted] = lex.entries_.try_emplace(casefold(word));
    Entry& entry = it->second;
    if (inserted) entry.surface = word;
    if (std::find(entry.prons.begin(), entry.prons.end(), seq) ==
        entry.prons.end())
      entry.prons.push_back(std::move(seq));
  }
  for (const auto& [folded, entry] : lex.entries_)
    lex.homophone_index_[lex.key_of(entry.prons.front())].insert(entry.surface);
  return lex;
}

Lexicon Lexicon::load_file(const std::string& path,
                           const PhonemeInventory& inventory) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lexicon: " + path);
  return load(in, inventory);
}

const Lexicon::Entry* Lexicon::find(std::string_view word) const {
  auto it = entries_.find(casefold(word));
  return it == entries_.end() ? nullptr : &it->second;
}

bool Lexicon::contains(std::string_view word) const {
  return find(word) != nullptr;
}

std::vector<std::string> Lexicon::vocabulary() const {
  std::vector<std::string> words;
  words.reserve(entries_.size());
  for (const auto& [folded, entry] : entries_) words.push_back(entry.surface);
  return words;
}

std::string Lexicon::key_of(const PhonemeSeq& seq) const {
  std::string key;
  for (std::size_t i = 0; i < seq.symbols.size(); ++i) {
    if (i) key += ' ';
    key += inventory_->normalize(seq.symbols[i]);
  }
  return key;
}

PhonemeSeq Lexicon::fallback_en(const std::string& folded) const {
  PhonemeSeq out;
  bool stressed = false;
  std::size_t i = 0;
  auto emit = [&](const char* phones) {
    for (auto& p : split_whitespace(phones)) {
      if (is_arpabet_vowel_base(p)) {
        p += stressed ? '0' : '1';
        stressed = true;
      }
      out.symbols.push_back(std::move(p));
    }
  };
  while (i < folded.size()) {
    const char c = folded[i];
    if (c < 'a' || c > 'z') {
      ++i;  // apostrophes, digits, stray bytes
      continue;
    }
    if (c == 'y') {
      emit(kLtsY.phones);
      ++i;
      continue;
    }
    if (c == 'z') {
      emit(kLtsZ.phones);
      ++i;
      continue;
    }
    bool matched = false;
    for (const auto& rule : kLtsRules) {
      const std::size_t len = std::string_view(rule.graphemes).size();
      if (folded.compare(i, len, rule.graphemes) == 0) {
        emit(rule.phones);
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  return out;
}

PhonemeSeq Lexicon::chars_zh(const std::string& word) const {
  PhonemeSeq out;
  for (const auto& c : utf8_chars(word)) {
    const Entry* e = find(c);
    if (!e) throw OovUnmappableError(word);
    const auto& canonical = e->prons.front().symbols;
    out.symbols.insert(out.symbols.end(), canonical.begin(), canonical.end());
  }
  return out;
}

PhonemeSeq Lexicon::g2p(std::string_view word, bool allow_fallback) const {
  const std::string surface(word);
  const auto parts = split_whitespace(surface);
  if (parts.empty()) throw OovUnmappableError(surface);
  if (parts.size() > 1) {
    PhonemeSeq out;
    for (const auto& part : parts) {
      PhonemeSeq p = g2p(part, allow_fallback);
      out.symbols.insert(out.symbols.end(), p.symbols.begin(),
                         p.symbols.end());
    }
    return out;
  }
  if (const Entry* e = find(surface)) return e->prons.front();
  if (inventory_->id() == InventoryId::kPinyinZH) return chars_zh(surface);
  if (!allow_fallback) throw OovUnmappableError(surface);
  PhonemeSeq fb = fallback_en(casefold(surface));
  if (fb.empty()) throw OovUnmappableError(surface);
  return fb;
}

const std::vector<PhonemeSeq>& Lexicon::pronunciations(
    std::string_view word) const {
  const Entry* e = find(word);
  if (!e) throw UnknownWordError(std::string(word));
  return e->prons;
}

std::string Lexicon::homophone_key(std::string_view word) const {
  const Entry* e = find(word);
  if (!e) throw UnknownWordError(std::string(word));
  return key_of(e->prons.front());
}

std::set<std::string> Lexicon::homophones(std::string_view word) const {
  const Entry* e = find(word);
  if (!e) throw UnknownWordError(std::string(word));
  std::set<std::string> out;
  auto it = homophone_index_.find(key_of(e->prons.front()));
  if (it != homophone_index_.end()) out = it->second;
  out.erase(e->surface);
  return out;
}

namespace {

// Distance-bounded Levenshtein over symbol vectors.
std::size_t symbol_distance(const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t prev = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t diag = prev + (a[i - 1] != b[j - 1]);
      prev = row[j];
      row[j] = std::min({diag, row[j] + 1, row[j - 1] + 1});
    }
  }
  return row[b.size()];
}

}  // namespace

std::set<std::string> Lexicon::near_homophones(std::string_view word,
                                               std::size_t max_dist) const {
  const Entry* self = find(word);
  if (!self) throw UnknownWordError(std::string(word));

  std::set<std::string> out;
  if (max_dist == 0) {
    // Distance zero is canonical-key identity, i.e. the homophone set.
    out = homophones(word);
  } else {
    // Stress-normalized canonical pronunciation of the query; candidates are
    // admitted when any of their pronunciations (alternates included) comes
    // within max_dist of it.
    std::vector<std::string> query;
    query.reserve(self->prons.front().symbols.size());
    for (const auto& s : self->prons.front().symbols)
      query.push_back(inventory_->normalize(s));

    for (const auto& [folded, entry] : entries_) {
      if (&entry == self) continue;
      bool close = false;
      for (const auto& p : entry.prons) {
        std::vector<std::string> norm;
        norm.reserve(p.symbols.size());
        for (const auto& s : p.symbols)
          norm.push_back(inventory_->normalize(s));
        const std::size_t len_gap = query.size() > norm.size()
                                        ? query.size() - norm.size()
                                        : norm.size() - query.size();
        if (len_gap <= max_dist && symbol_distance(query, norm) <= max_dist) {
          close = true;
          break;
        }
      }
      if (close) out.insert(entry.surface);
    }
  }

  if (inventory_->id() == InventoryId::kArpabetEN) {
    for (const auto& alt : rules_.alternatives(casefold(word))) {
      const Entry* e = find(alt);
      if (e && e != self) out.insert(e->surface);
    }
  }
  return out;
}

void Lexicon::serialize(std::ostream& out) const {
  for (const auto& [folded, entry] : entries_)
    for (const auto& p : entry.prons)
      out << entry.surface << '\t' << p.to_string() << '\n';
}

}  // namespace ctxbias
