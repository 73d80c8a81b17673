// benchmarks/bench_main.cpp
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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "ctxbias/align.hpp"
#include "ctxbias/context.hpp"
#include "ctxbias/fixtures.hpp"
#include "ctxbias/metrics.hpp"
#include "ctxbias/reward.hpp"
#include "ctxbias/rng.hpp"
#include "ctxbias/simdec.hpp"

namespace {

using namespace ctxbias;

std::vector<std::string> random_tokens(Rng& rng, std::size_t len,
                                       const std::vector<std::string>& vocab) {
  std::vector<std::string> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(vocab[rng.uniform_below(vocab.size())]);
  return out;
}

const fixtures::FixtureSet& fx() {
  static const auto set = fixtures::load();
  return set;
}

void BM_Align(benchmark::State& state) {
  const std::vector<std::string> alphabet = {"a", "b", "c", "d", "e",
                                             "f", "g", "h"};
  Rng rng(1);
  const auto ref = random_tokens(rng, state.range(0), alphabet);
  const auto hyp = random_tokens(rng, state.range(0), alphabet);
  for (auto _ : state) benchmark::DoNotOptimize(align(ref, hyp).cost);
}
BENCHMARK(BM_Align)->Arg(20)->Arg(100)->Arg(500);

void BM_ConstructContext(benchmark::State& state) {
  const auto& lex = fx().en_lexicon;
  const auto vocab = lex.vocabulary();
  Rng seeder(2);
  const auto ref = random_tokens(seeder, 8, vocab);
  Context cg;
  cg.kind = ContextKind::kG;
  for (const auto& w : random_tokens(seeder, state.range(0), vocab))
    cg.entries.push_back({w, {}, {}});
  const ContextPolicy policy;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    benchmark::DoNotOptimize(
        sample_pronunciation_context(cg, ref, lex, policy, rng).entries.size());
  }
}
BENCHMARK(BM_ConstructContext)->Arg(10)->Arg(50)->Arg(100);

void BM_BiasedWer(benchmark::State& state) {
  const std::vector<std::string> alphabet = {"a", "b", "c", "d", "e"};
  Rng rng(3);
  std::vector<std::vector<std::string>> refs, hyps;
  for (int i = 0; i < 50; ++i) {
    refs.push_back(random_tokens(rng, 12, alphabet));
    hyps.push_back(random_tokens(rng, 12, alphabet));
  }
  const auto bias =
      BiasSet::from_words({"a", "b"}, TokenizationMode::kWordsEN);
  for (auto _ : state)
    benchmark::DoNotOptimize(biased_wer(refs, hyps, bias).wer);
}
BENCHMARK(BM_BiasedWer);

void BM_SimulateAndReward(benchmark::State& state) {
  const auto& lex = fx().en_lexicon;
  const std::vector<std::string> ref = {"please", "tell", "me", "about", "PAC"};
  Context ctx;
  ctx.kind = ContextKind::kGP;
  ctx.entries.push_back({"PAC", lex.g2p("PAC"), {}});
  ConfusionModel model;
  model.p_confuse = 0.5;
  model.bias_boost = 2.0;
  const auto bias = BiasSet::from_words({"PAC"}, TokenizationMode::kWordsEN);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    const auto nbest = simulate_nbest(ref, ctx, lex, model, 8, rng);
    benchmark::DoNotOptimize(mwer_biased_loss(nbest, ref, bias).loss);
  }
}
BENCHMARK(BM_SimulateAndReward);

}  // namespace

BENCHMARK_MAIN();
