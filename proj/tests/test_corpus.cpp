// tests/test_corpus.cpp
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

#include "ctxbias/corpus.hpp"

#include <sstream>
#include <unordered_map>

#include "ctxbias/metrics.hpp"
#include "ctxbias/protocol.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace ctxbias;

TEST_CASE("direct token counting") {
  const auto t = count_frequencies({{"a", "b", "a"}});
  CHECK_EQ(t.total_tokens, 3);
  CHECK_EQ(t.counts.at("a"), 2);
  CHECK_EQ(t.counts.at("b"), 1);
}

TEST_CASE("empty stream yields an empty table") {
  const auto t = count_frequencies({});
  CHECK_EQ(t.total_tokens, 0);
  CHECK(t.counts.empty());
}

TEST_CASE("counts match an independent one-pass tally on fixture data") {
  std::vector<std::vector<std::string>> utterances;
  std::unordered_map<std::string, std::uint64_t> tally;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    const auto& rec = testutil::fx().train_en[i];
    auto toks = tokenize(rec.text, TokenizationMode::kWordsEN);
    for (const auto& t : toks) {
      ++tally[t];
      ++total;
    }
    utterances.push_back(std::move(toks));
  }
  const auto table = count_frequencies(utterances);
  CHECK_EQ(table.total_tokens, total);
  CHECK_EQ(table.counts.size(), tally.size());
  for (const auto& [w, c] : tally) CHECK_EQ(table.counts.at(w), c);
}

TEST_CASE("n = 0 marks everything rare") {
  const auto split =
      VocabSplit::from_frequencies(count_frequencies({{"a", "b"}}), 0);
  CHECK(split.common().empty());
  CHECK(split.is_rare("a"));
  CHECK(split.is_rare("b"));
  CHECK_EQ(split.rare_pool().size(), 2);
}

TEST_CASE("boundary ties break lexicographically") {
  // {a:3, b:2, c:2}: at n=2 the tie between b and c goes to b.
  const auto table =
      count_frequencies({{"a", "a", "a", "b", "b", "c", "c"}});
  const auto split = VocabSplit::from_frequencies(table, 2);
  CHECK_EQ(split.common(), std::set<std::string>({"a", "b"}));
  CHECK(split.is_rare("c"));
}

TEST_CASE("every word is common xor rare") {
  const auto table = count_frequencies(
      {{"a", "b", "c", "d", "e"}, {"a", "b", "c"}, {"a"}});
  const auto split = VocabSplit::from_frequencies(table, 2);
  for (const auto& [w, c] : table.counts)
    CHECK_NE(split.is_common(w), split.is_rare(w));
  CHECK_EQ(split.common().size() + split.rare_pool().size(),
           table.counts.size());
}

TEST_CASE("common set grows monotonically in n") {
  const auto table = count_frequencies(
      {{"a", "a", "b", "b", "c", "d", "e", "f"}, {"a", "c", "c"}});
  for (std::size_t n = 0; n + 1 <= table.counts.size(); ++n) {
    const auto small = VocabSplit::from_frequencies(table, n);
    const auto large = VocabSplit::from_frequencies(table, n + 1);
    for (const auto& w : small.common()) CHECK(large.is_common(w));
  }
}

TEST_CASE("protocol common-vocabulary size is 5000") {
  CHECK_EQ(protocol::kCommonVocabSize, 5000);
}

TEST_CASE("word lists round-trip through the text format") {
  const auto table = count_frequencies({{"b", "a", "c", "a"}});
  const auto split = VocabSplit::from_frequencies(table, 1);
  std::ostringstream common, rare;
  split.write_common(common);
  split.write_rare_pool(rare);
  CHECK_EQ(common.str(), "a\n");
  CHECK_EQ(rare.str(), "b\nc\n");
  std::istringstream cin(common.str()), rin(rare.str());
  const auto reloaded = VocabSplit::from_word_lists(
      VocabSplit::read_word_list(cin), VocabSplit::read_word_list(rin));
  CHECK_EQ(reloaded.common(), split.common());
  CHECK_EQ(reloaded.rare_pool(), split.rare_pool());
}
