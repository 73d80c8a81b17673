// core/src/reward.cpp
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

#include <algorithm>
#include <cmath>

#include "ctxbias/align.hpp"
#include "ctxbias/error.hpp"

namespace ctxbias {

void NBestList::validate() const {
  if (hyps.empty()) throw Error("N-best list is empty");
  for (const auto& h : hyps)
    if (!std::isfinite(h.loglik))
      throw Error("non-finite log-likelihood in N-best list");
}

std::vector<double> normalize_likelihoods(const NBestList& nbest) {
  nbest.validate();
  double max_ll = nbest.hyps.front().loglik;
  for (const auto& h : nbest.hyps) max_ll = std::max(max_ll, h.loglik);
  std::vector<double> probs;
  probs.reserve(nbest.size());
  double z = 0.0;
  for (const auto& h : nbest.hyps) {
    probs.push_back(std::exp(h.loglik - max_ll));
    z += probs.back();
  }
  for (double& p : probs) p /= z;
  return probs;
}

std::uint64_t biased_error_count(const std::vector<std::string>& hyp,
                                 const std::vector<std::string>& ref,
                                 const BiasSet& bias,
                                 InsertionAttribution ins_attr) {
  return attribute_errors(align(ref, hyp), ref, hyp, bias, ins_attr)
      .biased.total();
}

namespace {

double wb_statistic(const std::vector<std::string>& hyp,
                    const std::vector<std::string>& ref, const BiasSet& bias,
                    const RewardConfig& config) {
  const ErrorBreakdown b =
      attribute_errors(align(ref, hyp), ref, hyp, bias, config.ins_attr);
  if (config.wb_mode == WbMode::kCount)
    return static_cast<double>(b.biased.total());
  // Rate form for sensitivity analysis; 0 when no biased reference tokens.
  if (b.biased.ref_count == 0) return 0.0;
  return static_cast<double>(b.biased.total()) /
         static_cast<double>(b.biased.ref_count);
}

}  // namespace

RewardReport mwer_biased_loss(const NBestList& nbest,
                              const std::vector<std::string>& ref,
                              const BiasSet& bias, const RewardConfig& config) {
  RewardReport report;
  report.probs = normalize_likelihoods(nbest);
  const std::size_t n = nbest.size();
  report.wb.reserve(n);
  for (const auto& h : nbest.hyps)
    report.wb.push_back(wb_statistic(h.tokens, ref, bias, config));
  double sum = 0.0;
  for (double w : report.wb) sum += w;
  report.mean_wb = sum / static_cast<double>(n);
  report.advantages.reserve(n);
  double loss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    report.advantages.push_back(report.wb[i] - report.mean_wb);
    loss += report.probs[i] * report.advantages[i];
  }
  report.loss = loss / static_cast<double>(n);
  return report;
}

double perturbed_pair_loss(const NBestList& orig_nbest,
                 const std::vector<std::string>& orig_ref,
                 const NBestList& pert_nbest,
                 const std::vector<std::string>& pert_ref, const BiasSet& bias,
                 const RewardConfig& config) {
  return mwer_biased_loss(orig_nbest, orig_ref, bias, config).loss +
         mwer_biased_loss(pert_nbest, pert_ref, bias, config).loss;
}

double aggregate_ce_loss(double ce_g, double ce_gp, double ce_gpgd) {
  return ce_g + ce_gp + ce_gpgd;
}

double combined_objective(double reward_loss, double ce_sum, double ce_weight) {
  if (ce_weight < 0.0) throw Error("ce_weight must be >= 0");
  return reward_loss + ce_weight * ce_sum;
}

}  // namespace ctxbias
