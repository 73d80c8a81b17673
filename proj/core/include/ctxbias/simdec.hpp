// ctxbias/simdec.hpp
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

#include <string>
#include <vector>

#include "ctxbias/context.hpp"
#include "ctxbias/lexicon.hpp"
#include "ctxbias/reward.hpp"
#include "ctxbias/rng.hpp"

namespace ctxbias {

// Phoneme-confusion channel for fabricating homophone-confusable N-best
// lists. Each hypothesis token is either the reference token or one of its
// homophones; every substituted token lowers the score and every token that
// matches a context entry word raises it:
//
//   loglik = -base_loglik_scale * (#substituted tokens)
//            + bias_boost       * (#tokens equal to a context entry word)
struct ConfusionModel {
  double p_confuse = 0.3;
  double bias_boost = 0.0;
  double base_loglik_scale = 1.0;

  void validate() const;  // 0 <= p_confuse <= 1, bias_boost >= 0
};

// n hypotheses from the confusion channel. OOV reference tokens pass through
// verbatim. Deterministic given the rng seed; duplicates allowed.
NBestList simulate_nbest(const std::vector<std::string>& ref,
                         const Context& ctx, const Lexicon& lexicon,
                         const ConfusionModel& model, std::size_t n, Rng& rng);

}  // namespace ctxbias
