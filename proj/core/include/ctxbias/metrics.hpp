// ctxbias/metrics.hpp
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

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ctxbias/align.hpp"

namespace ctxbias {

// WordsEN: case-fold, split on whitespace. CharsZH: drop whitespace, one
// token per UTF-8 code point.
enum class TokenizationMode { kWordsEN, kCharsZH };

std::vector<std::string> tokenize(std::string_view text, TokenizationMode mode);

// How hypothesis insertions are attributed to the biased bucket.
//   kByHypWord:   an inserted token counts as biased when the inserted word is
//                 on the bias list (over-triggering counts against biasing).
//   kNeverBiased: insertions always land in the unbiased bucket.
enum class InsertionAttribution { kByHypWord, kNeverBiased };

// A bias list prepared for token marking. For kWordsEN membership is per
// case-folded token. For kCharsZH the list entries are multi-character
// strings located in a token sequence by greedy left-to-right longest match;
// characters inside matched spans are biased.
class BiasSet {
 public:
  BiasSet() : mode_(TokenizationMode::kWordsEN) {}
  static BiasSet from_words(const std::vector<std::string>& words,
                            TokenizationMode mode);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  TokenizationMode mode() const { return mode_; }

  // Biased/unbiased flag per token of a tokenized utterance.
  std::vector<bool> mark(const std::vector<std::string>& tokens) const;

 private:
  TokenizationMode mode_;
  // Case-folded entries; for kCharsZH each entry is its char-token sequence.
  std::set<std::vector<std::string>> entries_;
  std::size_t max_entry_len_ = 0;
};

struct ErrorCounts {
  std::uint64_t sub = 0, del = 0, ins = 0, ref_count = 0;
  std::uint64_t total() const { return sub + del + ins; }
};

// Alignment errors partitioned by bias-list membership.
struct ErrorBreakdown {
  ErrorCounts biased, unbiased;
  std::uint64_t total_errors() const {
    return biased.total() + unbiased.total();
  }
};

// Attribute one utterance's alignment ops to the biased/unbiased buckets.
ErrorBreakdown attribute_errors(
    const Alignment& alignment, const std::vector<std::string>& ref,
    const std::vector<std::string>& hyp, const BiasSet& bias,
    InsertionAttribution ins_attr = InsertionAttribution::kByHypWord);

// Corpus WER: total alignment cost over total reference tokens.
// Throws LengthMismatchError / EmptyReferenceCorpusError.
double corpus_wer(const std::vector<std::vector<std::string>>& refs,
                  const std::vector<std::vector<std::string>>& hyps);

struct WerReport {
  std::uint64_t utterances = 0;
  double wer = 0.0;
  // Unset when the corresponding reference bucket is empty (the rate has a
  // zero denominator and is reported as undefined, never as 0).
  std::optional<double> bwer;
  std::optional<double> uwer;
  ErrorBreakdown breakdown;
};

WerReport biased_wer(
    const std::vector<std::vector<std::string>>& refs,
    const std::vector<std::vector<std::string>>& hyps, const BiasSet& bias,
    InsertionAttribution ins_attr = InsertionAttribution::kByHypWord);

}  // namespace ctxbias
