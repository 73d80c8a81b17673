// tests/test_perturb.cpp
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

#include "ctxbias/perturb.hpp"

#include <algorithm>
#include <map>

#include "ctxbias/error.hpp"
#include "ctxbias/text.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace ctxbias;

namespace {

Context paper_gpgd() {
  const auto& lex = testutil::fx().en_lexicon;
  Context ctx;
  ctx.kind = ContextKind::kGPGD;
  ctx.entries.push_back({"speech", lex.g2p("speech"), {}});
  ctx.entries.push_back({"PAC", lex.g2p("PAC"), "pack"});
  return ctx;
}

std::multiset<std::string> pron_multiset(const Context& ctx) {
  std::multiset<std::string> out;
  for (const auto& e : ctx.entries) out.insert(e.pron->to_string());
  return out;
}

}  // namespace

TEST_CASE("keyword and distractor swap in reference and context") {
  const auto& lex = testutil::fx().en_lexicon;
  const std::vector<std::string> ref = {"please", "tell", "me", "about", "PAC"};
  const auto pair = perturb_pair(ref, paper_gpgd(), lex);

  CHECK_EQ(pair.perturbed_ref,
           std::vector<std::string>({"please", "tell", "me", "about", "pack"}));
  REQUIRE_EQ(pair.swapped.size(), 1);
  CHECK_EQ(pair.swapped[0].first, "PAC");
  CHECK_EQ(pair.swapped[0].second, "pack");

  // (PAC, P AE1 K, pack) becomes (pack, P AE1 K, PAC); the untouched entry
  // stays identical.
  CHECK_EQ(pair.perturbed_ctx.entries[0], pair.original_ctx.entries[0]);
  const auto& swapped = pair.perturbed_ctx.entries[1];
  CHECK_EQ(swapped.word, "pack");
  CHECK_EQ(swapped.pron->to_string(), "P AE1 K");
  CHECK_EQ(*swapped.distractor, "PAC");
}

TEST_CASE("perturbing twice restores the original") {
  const auto& lex = testutil::fx().en_lexicon;
  const std::vector<std::string> ref = {"please", "tell", "me", "about", "PAC"};
  const auto once = perturb_pair(ref, paper_gpgd(), lex);
  const auto twice = perturb_pair(once.perturbed_ref, once.perturbed_ctx, lex);
  CHECK_EQ(twice.perturbed_ref, ref);
  CHECK_EQ(twice.perturbed_ctx, once.original_ctx);
}

TEST_CASE("context without distractors is rejected") {
  const auto& lex = testutil::fx().en_lexicon;
  Context ctx;
  ctx.kind = ContextKind::kGPGD;
  ctx.entries.push_back({"speech", lex.g2p("speech"), {}});
  CHECK_THROWS_AS(perturb_pair({"speech"}, ctx, lex), NoDistractorEntriesError);
}

TEST_CASE("unknown distractor words are rejected") {
  const auto& lex = testutil::fx().en_lexicon;
  Context ctx;
  ctx.kind = ContextKind::kGPGD;
  ctx.entries.push_back({"PAC", lex.g2p("PAC"), "zzqx"});
  CHECK_THROWS_AS(perturb_pair({"PAC"}, ctx, lex), UnknownWordError);
}

TEST_CASE("every occurrence of a swapped keyword is replaced") {
  const auto& lex = testutil::fx().en_lexicon;
  const std::vector<std::string> ref = {"PAC", "and", "pac", "again", "PAC"};
  const auto pair = perturb_pair(ref, paper_gpgd(), lex);
  CHECK_EQ(pair.perturbed_ref,
           std::vector<std::string>({"pack", "and", "pack", "again", "pack"}));
}

TEST_CASE("non-swapped positions stay untouched and counts are preserved") {
  Rng rng(31);
  const auto& lex = testutil::fx().en_lexicon;
  const auto vocab = lex.vocabulary();
  int exercised = 0;
  for (int i = 0; i < 400; ++i) {
    auto ref = testutil::random_tokens(rng, 8, vocab, 1);
    Context cg;
    cg.kind = ContextKind::kG;
    for (const auto& w : ref) cg.entries.push_back({w, {}, {}});
    Rng draw(rng.next_u64());
    ContextPolicy policy;
    policy.p1 = 0.0;
    policy.p2 = 1.0;
    const auto ctx = sample_pronunciation_context(cg, ref, lex, policy, draw);
    const bool has_distractor =
        std::any_of(ctx.entries.begin(), ctx.entries.end(),
                    [](const ContextEntry& e) { return e.distractor.has_value(); });
    if (!has_distractor) continue;
    ++exercised;

    const auto pair = perturb_pair(ref, ctx, lex);
    REQUIRE_EQ(pair.perturbed_ref.size(), ref.size());
    std::set<std::string> swapped_words;
    for (const auto& [w, d] : pair.swapped) swapped_words.insert(casefold(w));
    for (std::size_t t = 0; t < ref.size(); ++t)
      if (!swapped_words.count(casefold(ref[t])))
        CHECK_EQ(pair.perturbed_ref[t], ref[t]);

    // Exact homophone swaps leave the pronunciation multiset unchanged.
    // Stress-variant pairs (key-equal but raw-different, e.g. below/billow)
    // are excluded: their raw symbols legitimately change.
    bool all_exact = true;
    for (const auto& [w, d] : pair.swapped)
      if (lex.g2p(w) != lex.g2p(d)) all_exact = false;
    if (all_exact)
      CHECK_EQ(pron_multiset(pair.original_ctx), pron_multiset(pair.perturbed_ctx));

    // Involution, componentwise.
    const auto back = perturb_pair(pair.perturbed_ref, pair.perturbed_ctx, lex);
    CHECK_EQ(back.perturbed_ref, ref);
    CHECK_EQ(back.perturbed_ctx, ctx);
  }
  CHECK_GT(exercised, 100);
}

TEST_CASE("segmented Mandarin keywords swap as spans") {
  const auto& lex = testutil::fx().zh_lexicon;
  Context ctx;
  ctx.kind = ContextKind::kGPGD;
  ctx.entries.push_back({"权力", lex.g2p("权力"), "权利"});
  const std::vector<std::string> ref = {"老师", "说", "权力", "的", "事"};
  const auto pair = perturb_pair(ref, ctx, lex);
  CHECK_EQ(pair.perturbed_ref,
           std::vector<std::string>({"老师", "说", "权利", "的", "事"}));
  const auto back = perturb_pair(pair.perturbed_ref, pair.perturbed_ctx, lex);
  CHECK_EQ(back.perturbed_ref, ref);
}
