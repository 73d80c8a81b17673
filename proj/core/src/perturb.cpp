// core/src/perturb.cpp
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

#include "ctxbias/error.hpp"
#include "ctxbias/text.hpp"

namespace ctxbias {

namespace {

std::vector<std::string> folded_tokens(const std::string& phrase) {
  return split_whitespace(casefold(phrase));
}

bool span_matches(const std::vector<std::string>& tokens, std::size_t at,
                  const std::vector<std::string>& span) {
  if (at + span.size() > tokens.size()) return false;
  for (std::size_t k = 0; k < span.size(); ++k)
    if (casefold(tokens[at + k]) != span[k]) return false;
  return true;
}

}  // namespace

PerturbedPair perturb_pair(const std::vector<std::string>& reference,
                           const Context& gpgd_ctx, const Lexicon& lexicon) {
  if (gpgd_ctx.kind != ContextKind::kGPGD)
    throw Error("perturb_pair expects a GPGD context");
  gpgd_ctx.validate();

  PerturbedPair pair;
  pair.original_ref = reference;
  pair.original_ctx = gpgd_ctx;
  pair.perturbed_ctx.kind = ContextKind::kGPGD;

  // Swap the context entries and collect (keyword, distractor) pairs.
  for (const auto& e : gpgd_ctx.entries) {
    if (!e.distractor) {
      pair.perturbed_ctx.entries.push_back(e);
      continue;
    }
    const std::string& w = e.word;
    const std::string& d = *e.distractor;
    if (!lexicon.contains(d)) throw UnknownWordError(d);
    pair.perturbed_ctx.entries.push_back({d, lexicon.g2p(d), w});
    pair.swapped.emplace_back(w, d);
  }
  if (pair.swapped.empty()) throw NoDistractorEntriesError();

  // Single left-to-right pass over the reference; emitted distractor tokens
  // are never rescanned, so chained swaps cannot cascade.
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
      spans;
  spans.reserve(pair.swapped.size());
  for (const auto& [w, d] : pair.swapped)
    spans.emplace_back(folded_tokens(w), split_whitespace(d));

  std::size_t i = 0;
  while (i < reference.size()) {
    bool replaced = false;
    for (std::size_t s = 0; s < spans.size(); ++s) {
      if (span_matches(reference, i, spans[s].first)) {
        for (const auto& tok : spans[s].second)
          pair.perturbed_ref.push_back(tok);
        i += spans[s].first.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) pair.perturbed_ref.push_back(reference[i++]);
  }
  return pair;
}

}  // namespace ctxbias
