// tests/test_lexicon.cpp
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

#include <cctype>
#include <map>
#include <sstream>

#include "ctxbias/error.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace ctxbias;

namespace {

Lexicon from_text(const std::string& text,
                  const PhonemeInventory& inv = PhonemeInventory::arpabet()) {
  std::istringstream in(text);
  return Lexicon::load(in, inv);
}

}  // namespace

TEST_CASE("inventory symbols are non-empty and whitespace-free") {
  for (const auto* inv : {&PhonemeInventory::arpabet(),
                          &PhonemeInventory::pinyin()}) {
    CHECK(!inv->symbols().empty());
    for (const auto& s : inv->symbols()) {
      CHECK(!s.empty());
      CHECK_EQ(s.find(' '), std::string::npos);
    }
  }
}

TEST_CASE("arpabet vowels carry a stress digit, pinyin a tone digit") {
  CHECK(PhonemeInventory::arpabet().contains("IY1"));
  CHECK(PhonemeInventory::arpabet().contains("K"));
  CHECK(!PhonemeInventory::arpabet().contains("IY"));
  for (char t = '1'; t <= '5'; ++t)
    CHECK(PhonemeInventory::pinyin().contains(std::string("zhong") + t));
  CHECK(!PhonemeInventory::pinyin().contains("zhong"));
  CHECK(!PhonemeInventory::pinyin().contains("zhong0"));
}

TEST_CASE("stress normalization strips English stress, keeps Mandarin tone") {
  CHECK_EQ(PhonemeInventory::arpabet().normalize("IY1"), "IY");
  CHECK_EQ(PhonemeInventory::arpabet().normalize("CH"), "CH");
  CHECK_EQ(PhonemeInventory::pinyin().normalize("zhong1"), "zhong1");
}

TEST_CASE("load builds entries and the homophone index") {
  const auto lex = from_text("speech\tS P IY1 CH\n");
  CHECK_EQ(lex.size(), 1);
  CHECK_EQ(lex.g2p("speech").to_string(), "S P IY1 CH");
}

TEST_CASE("empty source yields an empty lexicon") {
  const auto lex = from_text("");
  CHECK_EQ(lex.size(), 0);
}

TEST_CASE("PAC and pack share a homophone key") {
  const auto lex = from_text("PAC\tP AE1 K\npack\tP AE1 K\n");
  CHECK_EQ(lex.homophones("PAC"), std::set<std::string>({"pack"}));
  CHECK_EQ(lex.homophones("pack"), std::set<std::string>({"PAC"}));
}

TEST_CASE("comment lines and blank lines are skipped") {
  const auto lex = from_text("# a comment\n\nsee\tS IY1\n");
  CHECK_EQ(lex.size(), 1);
}

TEST_CASE("malformed lines carry their line number") {
  try {
    from_text("see\tS IY1\nno-tab-here\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK_EQ(e.line(), 2);
  }
}

TEST_CASE("unknown symbols are rejected") {
  try {
    from_text("word\tQQ9\n");
    FAIL("expected UnknownSymbolError");
  } catch (const UnknownSymbolError& e) {
    CHECK_EQ(e.word(), "word");
    CHECK_EQ(e.symbol(), "QQ9");
  }
}

TEST_CASE("paper worked-example pronunciations") {
  const auto& lex = testutil::fx().en_lexicon;
  CHECK_EQ(lex.g2p("PAC").to_string(), "P AE1 K");
  CHECK_EQ(lex.g2p("speech").to_string(), "S P IY1 CH");
  // "psalm" has no initial P sound despite its spelling.
  CHECK_EQ(lex.g2p("psalm").symbols.front(), "S");
}

TEST_CASE("case-folded lookup preserves dictionary surface forms") {
  const auto& lex = testutil::fx().en_lexicon;
  CHECK_EQ(lex.g2p("pac").to_string(), "P AE1 K");
  CHECK_EQ(lex.homophones("pac"), std::set<std::string>({"pack"}));
}

TEST_CASE("OOV with fallback disabled raises OovUnmappable") {
  const auto& lex = testutil::fx().en_lexicon;
  CHECK_THROWS_AS(lex.g2p("zzqx", false), OovUnmappableError);
}

TEST_CASE("English letter-to-sound fallback is deterministic and in-inventory") {
  const auto& lex = testutil::fx().en_lexicon;
  const auto a = lex.g2p("zzqx");
  const auto b = lex.g2p("zzqx");
  CHECK_EQ(a, b);
  CHECK(!a.symbols.empty());
  for (const auto& s : a.symbols)
    CHECK(PhonemeInventory::arpabet().contains(s));
  // A legible case: the digraph rules fire.
  CHECK_EQ(lex.g2p("phish").to_string(), "F IH1 SH");
}

TEST_CASE("multi-word phrases transcribe word by word") {
  const auto& lex = testutil::fx().en_lexicon;
  CHECK_EQ(lex.g2p("speech PAC").to_string(), "S P IY1 CH P AE1 K");
}

TEST_CASE("homophone relation is symmetric and transitive on the fixture") {
  const auto& lex = testutil::fx().en_lexicon;
  const auto vocab = lex.vocabulary();
  std::map<std::string, std::set<std::string>> h;
  for (const auto& w : vocab) h[w] = lex.homophones(w);
  for (const auto& w : vocab) {
    CHECK(!h[w].count(w));
    for (const auto& x : h[w]) {
      CHECK(h[x].count(w));  // symmetry
      for (const auto& y : h[x])
        if (y != w) CHECK(h[w].count(y));  // transitivity
    }
  }
}

TEST_CASE("words with unique pronunciations have no homophones") {
  const auto& lex = testutil::fx().en_lexicon;
  CHECK(lex.homophones("speech").empty());
  CHECK(lex.homophones("something").empty());
}

TEST_CASE("homophones of an unknown word raise UnknownWord") {
  const auto& lex = testutil::fx().en_lexicon;
  CHECK_THROWS_AS(lex.homophones("zzqx"), UnknownWordError);
  CHECK_THROWS_AS(lex.near_homophones("zzqx", 1), UnknownWordError);
}

TEST_CASE("near_homophones at distance zero is exactly the homophone set") {
  const auto& lex = testutil::fx().en_lexicon;
  for (const auto& w : lex.vocabulary())
    CHECK_EQ(lex.near_homophones(w, 0), lex.homophones(w));
}

TEST_CASE("sale and sail sit in each other's distance-zero set") {
  const auto& lex = testutil::fx().en_lexicon;
  CHECK_EQ(lex.homophone_key("sale"), lex.homophone_key("sail"));
  CHECK(lex.near_homophones("sale", 0).count("sail"));
  CHECK(lex.near_homophones("sail", 0).count("sale"));
}

TEST_CASE("near_homophones grows monotonically with the distance bound") {
  const auto& lex = testutil::fx().en_lexicon;
  for (const auto& w : lex.vocabulary()) {
    const auto d0 = lex.near_homophones(w, 0);
    const auto d1 = lex.near_homophones(w, 1);
    const auto d2 = lex.near_homophones(w, 2);
    for (const auto& x : d0) CHECK(d1.count(x));
    for (const auto& x : d1) CHECK(d2.count(x));
  }
}

TEST_CASE("near_homophones of PAC at distance one") {
  const auto& lex = testutil::fx().en_lexicon;
  const auto near = lex.near_homophones("PAC", 1);
  CHECK(near.count("pack"));
  CHECK(near.count("pact"));
  CHECK(near.count("pat"));
  CHECK(!near.count("PAC"));
}

TEST_CASE("alternate pronunciations participate at distance >= 1") {
  const auto& lex = testutil::fx().en_lexicon;
  // read: canonical R IY1 D, alternate R EH1 D. homophones uses the
  // canonical key only; the alternate surfaces through near_homophones.
  CHECK_EQ(lex.homophones("read"), std::set<std::string>({"reed"}));
  CHECK(lex.near_homophones("read", 1).count("red"));
}

TEST_CASE("stress digits do not block homophone identity") {
  const auto& lex = testutil::fx().en_lexicon;
  CHECK(lex.homophones("below").count("billow"));
  CHECK(lex.homophones("billow").count("below"));
}

TEST_CASE("rule-table spelling alternatives join the near set") {
  RuleTable rules;
  {
    std::istringstream in("suffix\tck\tc\n");
    rules = RuleTable::load(in);
  }
  auto lex = from_text("PAC\tP AE1 K\npack\tP AE1 K\nsee\tS IY1\n");
  lex.set_rule_table(rules);
  CHECK(lex.near_homophones("PAC", 0).count("pack"));
  const auto alts = rules.alternatives("pac");
  CHECK(alts.count("pack"));
}

TEST_CASE("serialization round-trips the dictionary") {
  const auto& lex = testutil::fx().en_lexicon;
  std::ostringstream out;
  lex.serialize(out);
  std::istringstream in(out.str());
  const auto reloaded = Lexicon::load(in, PhonemeInventory::arpabet());
  CHECK_EQ(reloaded.size(), lex.size());
  for (const auto& w : lex.vocabulary()) {
    CHECK_EQ(reloaded.g2p(w), lex.g2p(w));
    CHECK_EQ(reloaded.pronunciations(w), lex.pronunciations(w));
    CHECK_EQ(reloaded.homophones(w), lex.homophones(w));
  }
}

TEST_CASE("Mandarin word and character lookup") {
  const auto& lex = testutil::fx().zh_lexicon;
  CHECK_EQ(lex.g2p("中国").to_string(), "zhong1 guo2");
  CHECK_EQ(lex.g2p("中").to_string(), "zhong1");
  // OOV multi-character word falls back to per-character concatenation.
  CHECK_EQ(lex.g2p("中门").to_string(), "zhong1 men2");
  CHECK_THROWS_AS(lex.g2p("犰"), OovUnmappableError);
}

TEST_CASE("Mandarin homophones keep tone identity") {
  const auto& lex = testutil::fx().zh_lexicon;
  const auto ta = lex.homophones("他");
  CHECK(ta.count("她"));
  CHECK(ta.count("它"));
  // Different tones never merge: shi2 vs shi4.
  CHECK(!lex.homophones("十").count("是"));
  // Multi-syllable word homophones.
  CHECK(lex.homophones("权力").count("权利"));
}

TEST_CASE("duplicate dictionary words accumulate alternates in order") {
  const auto lex = from_text("read\tR IY1 D\nread\tR EH1 D\n");
  const auto& prons = lex.pronunciations("read");
  REQUIRE_EQ(prons.size(), 2);
  CHECK_EQ(prons[0].to_string(), "R IY1 D");
  CHECK_EQ(prons[1].to_string(), "R EH1 D");
  CHECK_EQ(lex.g2p("read").to_string(), "R IY1 D");
}
