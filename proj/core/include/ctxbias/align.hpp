// ctxbias/align.hpp
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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ctxbias {

enum class EditOp { kMatch, kSubstitute, kDelete, kInsert };

// One step of an edit script. Match/Substitute carry both indices, Delete
// only ref_index, Insert only hyp_index.
struct AlignmentOp {
  EditOp kind;
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;

  bool operator==(const AlignmentOp&) const = default;
};

struct Alignment {
  std::vector<AlignmentOp> ops;
  std::size_t cost = 0;  // #Substitute + #Delete + #Insert
};

// Token lists longer than this are rejected (memory is |ref| x |hyp|).
inline constexpr std::size_t kMaxAlignTokens = 10000;

// Minimal-cost alignment under unit costs. Backtrace ties are broken in the
// fixed order Match > Substitute > Delete > Insert so error attribution is
// reproducible. Throws InputTooLongError beyond kMaxAlignTokens.
Alignment align(const std::vector<std::string>& ref,
                const std::vector<std::string>& hyp);

}  // namespace ctxbias
