// ctxbias/perturb.hpp
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
#include <utility>
#include <vector>

#include "ctxbias/context.hpp"
#include "ctxbias/lexicon.hpp"

namespace ctxbias {

// A reference transcript and its homophone-swapped twin, with the matching
// context substitution: every entry (w, T(w), w') becomes (w', T(w'), w) and
// every occurrence of w in the reference becomes w'.
struct PerturbedPair {
  std::vector<std::string> original_ref;
  std::vector<std::string> perturbed_ref;
  Context original_ctx;
  Context perturbed_ctx;
  std::vector<std::pair<std::string, std::string>> swapped;  // (word, distractor)
};

// Swaps ALL distractor-bearing entries in one pass. Keyword occurrences in
// the reference are matched case-insensitively as contiguous token spans, so
// multi-token keywords (segmented Mandarin words) swap cleanly. Applying the
// function to its own output restores the input.
// Throws NoDistractorEntriesError / UnknownWordError.
PerturbedPair perturb_pair(const std::vector<std::string>& reference,
                           const Context& gpgd_ctx, const Lexicon& lexicon);

}  // namespace ctxbias
