// core/src/corpus.cpp
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

#include "ctxbias/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace ctxbias {

FreqTable count_frequencies(
    const std::vector<std::vector<std::string>>& utterances) {
  FreqTable table;
  for (const auto& u : utterances) table.add(u);
  return table;
}

VocabSplit VocabSplit::from_frequencies(const FreqTable& freq, std::size_t n) {
  std::vector<std::pair<std::string, std::uint64_t>> ranked(
      freq.counts.begin(), freq.counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  VocabSplit split;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (i < n)
      split.common_.insert(ranked[i].first);
    else
      split.rare_pool_.push_back(ranked[i].first);
  }
  std::sort(split.rare_pool_.begin(), split.rare_pool_.end());
  return split;
}

VocabSplit VocabSplit::from_word_lists(std::vector<std::string> common,
                                       std::vector<std::string> rare_pool) {
  VocabSplit split;
  split.common_.insert(common.begin(), common.end());
  std::sort(rare_pool.begin(), rare_pool.end());
  rare_pool.erase(std::unique(rare_pool.begin(), rare_pool.end()),
                  rare_pool.end());
  split.rare_pool_ = std::move(rare_pool);
  return split;
}

void VocabSplit::write_common(std::ostream& out) const {
  for (const auto& w : common_) out << w << '\n';
}

void VocabSplit::write_rare_pool(std::ostream& out) const {
  for (const auto& w : rare_pool_) out << w << '\n';
}

std::vector<std::string> VocabSplit::read_word_list(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) words.push_back(line);
  }
  return words;
}

}  // namespace ctxbias
