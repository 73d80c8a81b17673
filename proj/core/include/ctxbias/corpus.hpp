// ctxbias/corpus.hpp
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
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ctxbias {

// Exact token counts over a training corpus.
struct FreqTable {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total_tokens = 0;

  void add(const std::vector<std::string>& tokens) {
    for (const auto& t : tokens) ++counts[t];
    total_tokens += tokens.size();
  }
};

FreqTable count_frequencies(
    const std::vector<std::vector<std::string>>& utterances);

// The common/rare vocabulary partition: the n highest-count words are common
// (boundary ties broken lexicographically), everything else is rare. The
// training vocabulary's rare remainder is kept as the padding pool for
// bias-list construction.
class VocabSplit {
 public:
  static VocabSplit from_frequencies(const FreqTable& freq, std::size_t n);
  static VocabSplit from_word_lists(std::vector<std::string> common,
                                    std::vector<std::string> rare_pool);

  bool is_common(const std::string& word) const {
    return common_.count(word) > 0;
  }
  bool is_rare(const std::string& word) const { return !is_common(word); }

  const std::set<std::string>& common() const { return common_; }
  const std::vector<std::string>& rare_pool() const { return rare_pool_; }

  // Sorted word-per-line text.
  void write_common(std::ostream& out) const;
  void write_rare_pool(std::ostream& out) const;
  static std::vector<std::string> read_word_list(std::istream& in);

 private:
  std::set<std::string> common_;
  std::vector<std::string> rare_pool_;  // sorted, deduplicated
};

}  // namespace ctxbias
