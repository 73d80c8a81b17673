// ctxbias/protocol.hpp
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

#include <array>
#include <cstddef>
#include <cstdint>

// Evaluation-protocol constants. These are the documented defaults of the
// toolkit; every CLI flag that exposes one of them defaults to the value here.
namespace ctxbias::protocol {

// Context sampling branch probabilities (GP branch, GPGD branch).
inline constexpr double kBranchP1 = 1.0 / 3.0;
inline constexpr double kBranchP2 = 1.0 / 3.0;

// Arbitrary-word padding range for grapheme contexts.
inline constexpr std::size_t kMinArbitraryWords = 1;
inline constexpr std::size_t kMaxArbitraryWords = 100;

// Keywords sampled per utterance: uniform in [1, min(kMaxKeywords, distinct)].
inline constexpr std::size_t kMaxKeywords = 3;

// Vocabulary split: the N most frequent training words are "common".
inline constexpr std::size_t kCommonVocabSize = 5000;

// N-best list size used by the simulator and documented for reward input.
inline constexpr std::size_t kNBestSize = 8;

// Weight of the aggregated CE term in the combined objective.
inline constexpr double kCeWeight = 0.01;

// Bias-list sizes exercised by the English and Mandarin protocols.
inline constexpr std::array<std::size_t, 4> kBiasListSizesEN = {100, 500, 1000,
                                                                2000};
inline constexpr std::array<std::size_t, 3> kBiasListSizesZH = {187, 400, 600};

inline constexpr std::uint64_t kDefaultSeed = 17;

}  // namespace ctxbias::protocol
