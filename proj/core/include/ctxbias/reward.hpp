// ctxbias/reward.hpp
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

#include "ctxbias/metrics.hpp"
#include "ctxbias/protocol.hpp"

namespace ctxbias {

// One decoder hypothesis with its (unnormalized) log-likelihood.
struct Hypothesis {
  std::vector<std::string> tokens;
  double loglik = 0.0;
};

// N-best hypothesis list; N >= 1 and all log-likelihoods finite.
struct NBestList {
  std::vector<Hypothesis> hyps;

  std::size_t size() const { return hyps.size(); }
  void validate() const;  // throws Error on empty list / non-finite loglik
};

// Softmax over the list's log-likelihoods (max-subtracted); sums to 1.
std::vector<double> normalize_likelihoods(const NBestList& nbest);

// Per-hypothesis error statistic entering the reward: the biased error
// count (default, MWER convention) or the biased error rate.
enum class WbMode { kCount, kRate };

struct RewardConfig {
  WbMode wb_mode = WbMode::kCount;
  InsertionAttribution ins_attr = InsertionAttribution::kByHypWord;
};

// Biased errors of one hypothesis against the reference (count form).
std::uint64_t biased_error_count(
    const std::vector<std::string>& hyp, const std::vector<std::string>& ref,
    const BiasSet& bias,
    InsertionAttribution ins_attr = InsertionAttribution::kByHypWord);

// Everything the biased-MWER evaluation of one N-best list produces.
// loss = (1/N) * sum_i probs[i] * (wb[i] - mean_wb).
struct RewardReport {
  std::vector<double> probs;
  std::vector<double> wb;
  double mean_wb = 0.0;
  std::vector<double> advantages;  // wb[i] - mean_wb; sums to zero
  double loss = 0.0;
};

RewardReport mwer_biased_loss(const NBestList& nbest,
                              const std::vector<std::string>& ref,
                              const BiasSet& bias,
                              const RewardConfig& config = {});

// Sum of the biased-MWER losses of the original and the perturbed instance.
double perturbed_pair_loss(const NBestList& orig_nbest,
                 const std::vector<std::string>& orig_ref,
                 const NBestList& pert_nbest,
                 const std::vector<std::string>& pert_ref, const BiasSet& bias,
                 const RewardConfig& config = {});

// Aggregate context-conditioned CE objective: the plain sum of the three
// externally computed per-context-type CE values.
double aggregate_ce_loss(double ce_g, double ce_gp, double ce_gpgd);

// reward_loss + ce_weight * ce_sum.
double combined_objective(double reward_loss, double ce_sum,
                          double ce_weight = protocol::kCeWeight);

}  // namespace ctxbias
