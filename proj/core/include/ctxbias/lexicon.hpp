// ctxbias/lexicon.hpp
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

#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ctxbias {

enum class InventoryId { kArpabetEN, kPinyinZH };

// The symbol alphabet pronunciations are written in. ArpabetEN vowels carry a
// trailing stress digit 0/1/2; PinyinZH syllables carry a tone digit 1-5
// (5 = neutral). The pinyin set is generated compositionally from the initial
// and final tables, which over-accepts a few unattested syllables but never
// rejects a real one.
class PhonemeInventory {
 public:
  static const PhonemeInventory& arpabet();
  static const PhonemeInventory& pinyin();
  static const PhonemeInventory& get(InventoryId id);

  InventoryId id() const { return id_; }
  const std::set<std::string>& symbols() const { return symbols_; }
  bool contains(const std::string& symbol) const {
    return symbols_.count(symbol) > 0;
  }

  // Homophone-key normalization: ArpabetEN strips the stress digit, PinyinZH
  // keeps the tone digit (tone distinguishes words).
  std::string normalize(const std::string& symbol) const;

 private:
  PhonemeInventory(InventoryId id, std::set<std::string> symbols)
      : id_(id), symbols_(std::move(symbols)) {}
  InventoryId id_;
  std::set<std::string> symbols_;
};

// An ordered pronunciation.
struct PhonemeSeq {
  std::vector<std::string> symbols;

  bool empty() const { return symbols.empty(); }
  std::string to_string() const;  // space-joined

  bool operator==(const PhonemeSeq&) const = default;
  auto operator<=>(const PhonemeSeq&) const = default;
};

// Grapheme substitution rules for spelling alternatives (English only).
// File format, one rule per line: `scope TAB lhs TAB rhs`, scope one of
// anywhere|prefix|suffix, applied in both directions; '#' comments ignored.
class RuleTable {
 public:
  static RuleTable load(std::istream& in);
  static RuleTable load_file(const std::string& path);

  std::size_t size() const { return rules_.size(); }

  // All single-rule rewrites of a case-folded word (not filtered against any
  // lexicon; callers intersect with their vocabulary). Excludes the word.
  std::set<std::string> alternatives(const std::string& word) const;

 private:
  enum class Scope { kAnywhere, kPrefix, kSuffix };
  struct Rule {
    Scope scope;
    std::string lhs, rhs;
  };
  std::vector<Rule> rules_;
};

class Lexicon {
 public:
  // `source` lines: `word TAB sym1 sym2 ...`; '#' comments and blank lines
  // ignored; repeated words accumulate alternate pronunciations in file
  // order. Throws ParseError / UnknownSymbolError.
  static Lexicon load(std::istream& source, const PhonemeInventory& inventory);
  static Lexicon load_file(const std::string& path,
                           const PhonemeInventory& inventory);

  const PhonemeInventory& inventory() const { return *inventory_; }
  void set_rule_table(RuleTable rules) { rules_ = std::move(rules); }

  std::size_t size() const { return entries_.size(); }
  bool contains(std::string_view word) const;

  // Dictionary surface forms, sorted. Lookup is case-folded; the surface form
  // of the first occurrence is what rendering and homophone sets return.
  std::vector<std::string> vocabulary() const;

  // Canonical (first-listed) pronunciation. English OOV words fall back to a
  // deterministic letter-to-sound rule table unless allow_fallback is false;
  // Mandarin OOV falls back to per-character lookup and errors on unknown
  // characters. Multi-word input is transcribed word by word.
  // Throws OovUnmappableError.
  PhonemeSeq g2p(std::string_view word, bool allow_fallback = true) const;

  // All pronunciations of an in-lexicon word, canonical first.
  const std::vector<PhonemeSeq>& pronunciations(std::string_view word) const;

  // Words sharing the word's canonical homophone key, excluding the word.
  // Throws UnknownWordError.
  std::set<std::string> homophones(std::string_view word) const;

  // Words within `max_dist` symbol-level Levenshtein distance of any of the
  // word's pronunciations (stress-normalized), plus rule-table spelling
  // alternatives present in the lexicon; excludes the word itself.
  std::set<std::string> near_homophones(std::string_view word,
                                        std::size_t max_dist) const;

  // Stress/tone-normalized canonical key, space-joined.
  std::string homophone_key(std::string_view word) const;

  // `word TAB syms` lines, words sorted, alternates in load order.
  void serialize(std::ostream& out) const;

 private:
  explicit Lexicon(const PhonemeInventory& inventory)
      : inventory_(&inventory) {}

  struct Entry {
    std::string surface;             // first-seen spelling
    std::vector<PhonemeSeq> prons;   // canonical first
  };

  const Entry* find(std::string_view word) const;
  std::string key_of(const PhonemeSeq& seq) const;
  PhonemeSeq fallback_en(const std::string& folded) const;
  PhonemeSeq chars_zh(const std::string& folded) const;

  const PhonemeInventory* inventory_;
  std::map<std::string, Entry> entries_;  // case-folded word -> entry
  std::map<std::string, std::set<std::string>> homophone_index_;  // key -> surfaces
  RuleTable rules_;
};

}  // namespace ctxbias
