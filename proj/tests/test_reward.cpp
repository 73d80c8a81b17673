// tests/test_reward.cpp
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

#include "ctxbias/reward.hpp"

#include <cmath>
#include <numeric>

#include "ctxbias/error.hpp"
#include "ctxbias/rng.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace ctxbias;

namespace {

BiasSet en_bias(const std::vector<std::string>& words) {
  return BiasSet::from_words(words, TokenizationMode::kWordsEN);
}

NBestList list_of(std::vector<std::pair<std::vector<std::string>, double>> hyps) {
  NBestList n;
  for (auto& [toks, ll] : hyps) n.hyps.push_back({std::move(toks), ll});
  return n;
}

// Random instance with integer wb values driven by token choice.
struct Instance {
  NBestList nbest;
  std::vector<std::string> ref;
  BiasSet bias;
};

Instance random_instance(Rng& rng, std::size_t n_max = 8) {
  const std::vector<std::string> alphabet = {"a", "b", "c", "d"};
  Instance inst;
  inst.ref = testutil::random_tokens(rng, 6, alphabet, 1);
  inst.bias = en_bias({"a", "b"});
  const std::size_t n =
      static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(n_max)));
  for (std::size_t i = 0; i < n; ++i) {
    Hypothesis h;
    h.tokens = testutil::random_tokens(rng, 6, alphabet);
    h.loglik = rng.uniform_real() * 10.0 - 5.0;
    inst.nbest.hyps.push_back(std::move(h));
  }
  return inst;
}

}  // namespace

TEST_CASE("equal log-likelihoods normalize to the uniform distribution") {
  const auto n = list_of({{{"a"}, 2.0}, {{"b"}, 2.0}, {{"c"}, 2.0}, {{"d"}, 2.0}});
  const auto p = normalize_likelihoods(n);
  for (double x : p) CHECK_EQ(x, doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("log-probabilities exponentiate back exactly") {
  const auto n = list_of({{{"a"}, std::log(0.8)}, {{"b"}, std::log(0.2)}});
  const auto p = normalize_likelihoods(n);
  CHECK_EQ(p[0], doctest::Approx(0.8).epsilon(1e-12));
  CHECK_EQ(p[1], doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("softmax is shift-invariant") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    NBestList a, b;
    const double c = rng.uniform_real() * 20.0 - 10.0;
    const std::size_t n = 1 + rng.uniform_below(8);
    for (std::size_t k = 0; k < n; ++k) {
      const double ll = rng.uniform_real() * 10.0 - 5.0;
      a.hyps.push_back({{"x"}, ll});
      b.hyps.push_back({{"x"}, ll + c});
    }
    const auto pa = normalize_likelihoods(a);
    const auto pb = normalize_likelihoods(b);
    for (std::size_t k = 0; k < n; ++k)
      CHECK_EQ(pa[k], doctest::Approx(pb[k]).epsilon(1e-12));
  }
}

TEST_CASE("probabilities sum to one") {
  Rng rng(22);
  for (int i = 0; i < 500; ++i) {
    const auto inst = random_instance(rng);
    const auto p = normalize_likelihoods(inst.nbest);
    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    CHECK_EQ(sum, doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("empty or non-finite lists are invalid") {
  CHECK_THROWS_AS(normalize_likelihoods(NBestList{}), Error);
  NBestList bad;
  bad.hyps.push_back({{"a"}, std::numeric_limits<double>::infinity()});
  CHECK_THROWS_AS(normalize_likelihoods(bad), Error);
}

TEST_CASE("biased error count examples") {
  CHECK_EQ(biased_error_count({"a"}, {"a"}, en_bias({"a"})), 0);
  CHECK_EQ(biased_error_count({"pack"}, {"pac"}, en_bias({"pac"})), 1);
  // Biased insertion: hyp adds "pack", which is on the list.
  CHECK_EQ(biased_error_count({"a", "pac", "pack"}, {"a", "pac"},
                              en_bias({"pac", "pack"})),
           1);
}

TEST_CASE("uniform probabilities give exactly zero loss") {
  const auto n =
      list_of({{{"pac"}, 1.0}, {{"pack"}, 1.0}, {{"pac", "pac"}, 1.0}});
  const auto report = mwer_biased_loss(n, {"pac"}, en_bias({"pac"}));
  CHECK_LE(std::abs(report.loss), 1e-12);
}

TEST_CASE("the 0.8/0.2 two-hypothesis fixture gives loss -0.3") {
  // probs [0.8, 0.2], wb [0, 2] -> mean 1, loss = (0.8*(-1) + 0.2*1)/2.
  const auto n = list_of({{{"pac", "pac"}, std::log(0.8)},
                          {{"pack", "pack"}, std::log(0.2)}});
  const auto report = mwer_biased_loss(n, {"pac", "pac"}, en_bias({"pac"}));
  CHECK_EQ(report.wb[0], 0.0);
  CHECK_EQ(report.wb[1], 2.0);
  CHECK_EQ(report.mean_wb, doctest::Approx(1.0).epsilon(1e-12));
  CHECK_EQ(report.loss, doctest::Approx(-0.3).epsilon(1e-9));
}

TEST_CASE("a single hypothesis is its own mean: loss zero") {
  const auto n = list_of({{{"pack"}, 0.7}});
  const auto report = mwer_biased_loss(n, {"pac"}, en_bias({"pac"}));
  CHECK_EQ(report.advantages[0], 0.0);
  CHECK_EQ(report.loss, 0.0);
}

TEST_CASE("summation form equals the closed form") {
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const auto inst = random_instance(rng);
    const auto report = mwer_biased_loss(inst.nbest, inst.ref, inst.bias);
    const std::size_t n = inst.nbest.size();
    double expectation = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      expectation += report.probs[k] * report.wb[k];
    const double closed = (expectation - report.mean_wb) / static_cast<double>(n);
    CHECK_EQ(report.loss, doctest::Approx(closed).epsilon(1e-9));
  }
}

TEST_CASE("advantages sum to zero and probs sum to one") {
  Rng rng(24);
  for (int i = 0; i < 1000; ++i) {
    const auto inst = random_instance(rng);
    const auto report = mwer_biased_loss(inst.nbest, inst.ref, inst.bias);
    const double adv =
        std::accumulate(report.advantages.begin(), report.advantages.end(), 0.0);
    const double probs =
        std::accumulate(report.probs.begin(), report.probs.end(), 0.0);
    CHECK_LE(std::abs(adv), 1e-9);
    CHECK_EQ(probs, doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("equal wb values give zero loss regardless of probabilities") {
  Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    NBestList n;
    const std::size_t k = 2 + rng.uniform_below(6);
    for (std::size_t j = 0; j < k; ++j)
      n.hyps.push_back({{"pack"}, rng.uniform_real() * 8.0 - 4.0});
    const auto report = mwer_biased_loss(n, {"pac"}, en_bias({"pac"}));
    CHECK_LE(std::abs(report.loss), 1e-12);
  }
}

TEST_CASE("raising the best hypothesis's score strictly lowers the loss") {
  Rng rng(26);
  int exercised = 0;
  while (exercised < 200) {
    auto inst = random_instance(rng, 6);
    auto report = mwer_biased_loss(inst.nbest, inst.ref, inst.bias);
    // Need a unique minimum and non-constant wb.
    std::size_t best = 0;
    int min_count = 0;
    for (std::size_t k = 0; k < report.wb.size(); ++k) {
      if (report.wb[k] < report.wb[best]) best = k;
    }
    for (double w : report.wb) min_count += (w == report.wb[best]);
    if (min_count != 1 || report.wb.size() < 2) continue;
    ++exercised;
    auto bumped = inst.nbest;
    bumped.hyps[best].loglik += 1.0;
    const auto after = mwer_biased_loss(bumped, inst.ref, inst.bias);
    CHECK_LT(after.loss, report.loss);
  }
}

TEST_CASE("duplicated hypotheses stay distinct entries") {
  const auto n = list_of({{{"pack"}, 1.0}, {{"pack"}, 1.0}, {{"pac"}, 1.0}});
  const auto report = mwer_biased_loss(n, {"pac"}, en_bias({"pac"}));
  CHECK_EQ(report.wb.size(), 3);
  CHECK_EQ(report.mean_wb, doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("rate mode divides by the biased reference count") {
  RewardConfig config;
  config.wb_mode = WbMode::kRate;
  const auto n = list_of({{{"pack", "pack"}, 0.0}, {{"pac", "pac"}, 0.0}});
  const auto report =
      mwer_biased_loss(n, {"pac", "pac"}, en_bias({"pac"}), config);
  CHECK_EQ(report.wb[0], doctest::Approx(1.0).epsilon(1e-12));
  CHECK_EQ(report.wb[1], 0.0);
}

TEST_CASE("the perturbed-pair loss sums the two instances and commutes") {
  const auto a = list_of({{{"pac"}, std::log(0.8)}, {{"pack"}, std::log(0.2)}});
  const auto b = list_of({{{"pack"}, std::log(0.6)}, {{"pac"}, std::log(0.4)}});
  const auto bias = en_bias({"pac", "pack"});
  const double la = mwer_biased_loss(a, {"pac"}, bias).loss;
  const double lb = mwer_biased_loss(b, {"pack"}, bias).loss;
  const double sum = perturbed_pair_loss(a, {"pac"}, b, {"pack"}, bias);
  CHECK_EQ(sum, doctest::Approx(la + lb).epsilon(1e-12));
  CHECK_EQ(perturbed_pair_loss(b, {"pack"}, a, {"pac"}, bias),
           doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("uniform lists on both sides give a zero pair loss") {
  const auto a = list_of({{{"pac"}, 1.0}, {{"pack"}, 1.0}});
  CHECK_LE(std::abs(perturbed_pair_loss(a, {"pac"}, a, {"pack"}, en_bias({"pac"}))),
           1e-12);
}

TEST_CASE("ce_sum is the plain sum of the three CE values") {
  CHECK_EQ(aggregate_ce_loss(0, 0, 0), 0.0);
  CHECK_EQ(aggregate_ce_loss(1.0, 2.0, 3.0), 6.0);
  CHECK_EQ(aggregate_ce_loss(3.0, 1.0, 2.0), aggregate_ce_loss(1.0, 2.0, 3.0));
}

TEST_CASE("combined objective applies the CE weight") {
  CHECK_EQ(combined_objective(-0.4, 6.0, 0.01),
           doctest::Approx(-0.34).epsilon(1e-12));
  CHECK_EQ(combined_objective(-0.4, 6.0, 0.0), -0.4);
  // Linear in the ce_sum argument.
  const double base = combined_objective(1.0, 2.0, 0.01);
  CHECK_EQ(combined_objective(1.0, 4.0, 0.01) - base,
           doctest::Approx(0.02).epsilon(1e-12));
  CHECK_THROWS_AS(combined_objective(0.0, 0.0, -1.0), Error);
}

TEST_CASE("protocol constants: N-best size 8, CE weight 0.01") {
  CHECK_EQ(protocol::kNBestSize, 8);
  CHECK_EQ(protocol::kCeWeight, 0.01);
}
