// core/src/simdec.cpp
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

#include "ctxbias/simdec.hpp"

#include <set>

#include "ctxbias/error.hpp"
#include "ctxbias/text.hpp"

namespace ctxbias {

void ConfusionModel::validate() const {
  if (p_confuse < 0.0 || p_confuse > 1.0)
    throw Error("p_confuse must lie in [0, 1]");
  if (bias_boost < 0.0) throw Error("bias_boost must be >= 0");
}

NBestList simulate_nbest(const std::vector<std::string>& ref,
                         const Context& ctx, const Lexicon& lexicon,
                         const ConfusionModel& model, std::size_t n, Rng& rng) {
  model.validate();
  if (n < 1) throw Error("n must be >= 1");

  std::set<std::string> context_words;
  for (const auto& e : ctx.entries) context_words.insert(casefold(e.word));

  // Homophone sets resolved once per distinct reference token.
  std::vector<std::vector<std::string>> choices(ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    if (!lexicon.contains(ref[i])) continue;
    const auto homos = lexicon.homophones(ref[i]);
    choices[i].assign(homos.begin(), homos.end());
  }

  NBestList out;
  out.hyps.reserve(n);
  for (std::size_t h = 0; h < n; ++h) {
    Hypothesis hyp;
    hyp.tokens.reserve(ref.size());
    std::size_t confusions = 0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      const double u = rng.uniform_real();
      if (u < model.p_confuse && !choices[i].empty()) {
        const std::size_t pick =
            static_cast<std::size_t>(rng.uniform_below(choices[i].size()));
        hyp.tokens.push_back(choices[i][pick]);
        ++confusions;
      } else {
        hyp.tokens.push_back(ref[i]);
      }
    }
    std::size_t context_hits = 0;
    for (const auto& tok : hyp.tokens)
      if (context_words.count(casefold(tok))) ++context_hits;
    hyp.loglik = -model.base_loglik_scale * static_cast<double>(confusions) +
                 model.bias_boost * static_cast<double>(context_hits);
    out.hyps.push_back(std::move(hyp));
  }
  return out;
}

}  // namespace ctxbias
