// ctxbias/context.hpp
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

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ctxbias/corpus.hpp"
#include "ctxbias/lexicon.hpp"
#include "ctxbias/protocol.hpp"
#include "ctxbias/rng.hpp"

namespace ctxbias {

enum class ContextKind { kG, kGP, kGPGD };

std::string_view to_string(ContextKind kind);
ContextKind context_kind_from_string(std::string_view s);

// One context slot: a word, optionally its pronunciation, optionally a
// grapheme-only confusable distractor. A distractor never appears without a
// pronunciation.
struct ContextEntry {
  std::string word;
  std::optional<PhonemeSeq> pron;
  std::optional<std::string> distractor;

  bool operator==(const ContextEntry&) const = default;
};

struct Context {
  ContextKind kind = ContextKind::kG;
  std::vector<ContextEntry> entries;

  bool operator==(const Context&) const = default;

  // Enforces the per-kind shape invariants; throws Error on violation.
  void validate() const;
};

// Sampling knobs for context construction. Defaults are the protocol values.
struct ContextPolicy {
  double p1 = protocol::kBranchP1;  // GP branch
  double p2 = protocol::kBranchP2;  // GPGD branch
  std::size_t min_arbitrary = protocol::kMinArbitraryWords;
  std::size_t max_arbitrary = protocol::kMaxArbitraryWords;
  std::size_t max_keywords = protocol::kMaxKeywords;

  void validate() const;  // p1,p2 >= 0, p1+p2 <= 1, 1 <= min <= max
};

// k distinct reference words (k uniform in [1, min(max_keywords, distinct)]),
// sampled uniformly without replacement, returned in reference order.
// Distinctness is case-folded; the first surface form is kept.
// Throws EmptyReferenceError.
std::vector<std::string> select_keywords(
    const std::vector<std::string>& reference, const ContextPolicy& policy,
    Rng& rng);

// Keywords plus m pool words (m uniform in [min_arbitrary, max_arbitrary],
// clamped to |pool|), in seeded-shuffle order. The pool must not share words
// with the keyword list. Throws PoolOverlapError.
Context build_grapheme_context(const std::vector<std::string>& keywords,
                               const std::vector<std::string>& pool,
                               const ContextPolicy& policy, Rng& rng);

// The pronunciation-guided sampling step: draw r ~ U(0,1); r < p1 gives the
// grapheme-phoneme context, r < p1+p2 additionally attaches a homophone
// distractor to every entry whose word occurs in the reference, otherwise the
// grapheme-only context is returned unchanged.
Context sample_pronunciation_context(const Context& grapheme_ctx,
                               const std::vector<std::string>& reference,
                               const Lexicon& lexicon,
                               const ContextPolicy& policy, Rng& rng);

// Deterministic distractor choice for a reference keyword: exact homophones
// first, then near-homophones at distance 1 (including rule-table spelling
// alternatives), lexicographically smallest within a tier. Words whose
// case-folded form is in `taken` are skipped. Empty when the word is OOV or
// no eligible confusable remains.
std::optional<std::string> pick_distractor(
    const Lexicon& lexicon, const std::string& word,
    const std::set<std::string>& taken = {});

// Comma-separated rendering: `word`, `word (SYM1 SYM2)`, and for an entry
// with a distractor `word (SYM1 SYM2), distractor`.
std::string render_context(const Context& ctx);

// Inverse of render_context for a known kind. Throws ParseError.
Context parse_context(std::string_view text, ContextKind kind);

// All rare words appearing in the test references, padded with uniformly
// sampled rare-vocabulary distractors to exactly n entries.
// Throws ListTooSmallError when n is below the required count or the rare
// vocabulary cannot fill the list.
std::set<std::string> build_bias_list(
    const std::vector<std::vector<std::string>>& test_refs,
    const VocabSplit& split, std::size_t n, Rng& rng);

}  // namespace ctxbias
