// core/src/metrics.cpp
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

#include "ctxbias/metrics.hpp"

#include <algorithm>
#include <cctype>

#include "ctxbias/error.hpp"
#include "ctxbias/text.hpp"

namespace ctxbias {

std::vector<std::string> tokenize(std::string_view text,
                                  TokenizationMode mode) {
  if (mode == TokenizationMode::kWordsEN)
    return split_whitespace(casefold(text));
  std::vector<std::string> tokens;
  for (auto& c : utf8_chars(text)) {
    if (c.size() == 1 && std::isspace(static_cast<unsigned char>(c[0])))
      continue;
    tokens.push_back(std::move(c));
  }
  return tokens;
}

BiasSet BiasSet::from_words(const std::vector<std::string>& words,
                            TokenizationMode mode) {
  BiasSet b;
  b.mode_ = mode;
  for (const auto& w : words) {
    auto entry = tokenize(w, mode);
    if (entry.empty()) continue;
    b.max_entry_len_ = std::max(b.max_entry_len_, entry.size());
    b.entries_.insert(std::move(entry));
  }
  return b;
}

std::vector<bool> BiasSet::mark(const std::vector<std::string>& tokens) const {
  std::vector<bool> mask(tokens.size(), false);
  if (entries_.empty()) return mask;
  if (mode_ == TokenizationMode::kWordsEN) {
    for (std::size_t i = 0; i < tokens.size(); ++i)
      mask[i] = entries_.count({casefold(tokens[i])}) > 0;
    return mask;
  }
  // Greedy left-to-right longest match of bias entries over the char tokens.
  std::size_t i = 0;
  std::vector<std::string> window;
  while (i < tokens.size()) {
    std::size_t best = 0;
    const std::size_t limit = std::min(max_entry_len_, tokens.size() - i);
    window.clear();
    for (std::size_t len = 1; len <= limit; ++len) {
      window.push_back(tokens[i + len - 1]);
      if (entries_.count(window)) best = len;
    }
    if (best == 0) {
      ++i;
      continue;
    }
    for (std::size_t k = 0; k < best; ++k) mask[i + k] = true;
    i += best;
  }
  return mask;
}

ErrorBreakdown attribute_errors(const Alignment& alignment,
                                const std::vector<std::string>& ref,
                                const std::vector<std::string>& hyp,
                                const BiasSet& bias,
                                InsertionAttribution ins_attr) {
  const std::vector<bool> ref_mask = bias.mark(ref);
  const std::vector<bool> hyp_mask = bias.mark(hyp);
  ErrorBreakdown out;
  for (const auto& op : alignment.ops) {
    switch (op.kind) {
      case EditOp::kMatch: {
        auto& bucket = ref_mask[*op.ref_index] ? out.biased : out.unbiased;
        bucket.ref_count++;
        break;
      }
      case EditOp::kSubstitute: {
        auto& bucket = ref_mask[*op.ref_index] ? out.biased : out.unbiased;
        bucket.ref_count++;
        bucket.sub++;
        break;
      }
      case EditOp::kDelete: {
        auto& bucket = ref_mask[*op.ref_index] ? out.biased : out.unbiased;
        bucket.ref_count++;
        bucket.del++;
        break;
      }
      case EditOp::kInsert: {
        const bool biased = ins_attr == InsertionAttribution::kByHypWord &&
                            hyp_mask[*op.hyp_index];
        (biased ? out.biased : out.unbiased).ins++;
        break;
      }
    }
  }
  return out;
}

double corpus_wer(const std::vector<std::vector<std::string>>& refs,
                  const std::vector<std::vector<std::string>>& hyps) {
  if (refs.size() != hyps.size())
    throw LengthMismatchError(refs.size(), hyps.size());
  std::uint64_t errors = 0, ref_tokens = 0;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    errors += align(refs[i], hyps[i]).cost;
    ref_tokens += refs[i].size();
  }
  if (ref_tokens == 0) throw EmptyReferenceCorpusError();
  return static_cast<double>(errors) / static_cast<double>(ref_tokens);
}

WerReport biased_wer(const std::vector<std::vector<std::string>>& refs,
                     const std::vector<std::vector<std::string>>& hyps,
                     const BiasSet& bias, InsertionAttribution ins_attr) {
  if (refs.size() != hyps.size())
    throw LengthMismatchError(refs.size(), hyps.size());
  WerReport report;
  report.utterances = refs.size();
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const Alignment a = align(refs[i], hyps[i]);
    const ErrorBreakdown b =
        attribute_errors(a, refs[i], hyps[i], bias, ins_attr);
    report.breakdown.biased.sub += b.biased.sub;
    report.breakdown.biased.del += b.biased.del;
    report.breakdown.biased.ins += b.biased.ins;
    report.breakdown.biased.ref_count += b.biased.ref_count;
    report.breakdown.unbiased.sub += b.unbiased.sub;
    report.breakdown.unbiased.del += b.unbiased.del;
    report.breakdown.unbiased.ins += b.unbiased.ins;
    report.breakdown.unbiased.ref_count += b.unbiased.ref_count;
  }
  const auto& bb = report.breakdown.biased;
  const auto& ub = report.breakdown.unbiased;
  const std::uint64_t ref_tokens = bb.ref_count + ub.ref_count;
  if (ref_tokens == 0) throw EmptyReferenceCorpusError();
  report.wer = static_cast<double>(report.breakdown.total_errors()) /
               static_cast<double>(ref_tokens);
  if (bb.ref_count > 0)
    report.bwer =
        static_cast<double>(bb.total()) / static_cast<double>(bb.ref_count);
  if (ub.ref_count > 0)
    report.uwer =
        static_cast<double>(ub.total()) / static_cast<double>(ub.ref_count);
  return report;
}

}  // namespace ctxbias
