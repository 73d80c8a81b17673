// core/src/align.cpp
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

#include "ctxbias/align.hpp"

#include <algorithm>
#include <cstdint>

#include "ctxbias/error.hpp"

namespace ctxbias {

Alignment align(const std::vector<std::string>& ref,
                const std::vector<std::string>& hyp) {
  if (ref.size() > kMaxAlignTokens) throw InputTooLongError(ref.size());
  if (hyp.size() > kMaxAlignTokens) throw InputTooLongError(hyp.size());

  const std::size_t nr = ref.size(), nh = hyp.size();
  const std::size_t stride = nh + 1;
  // Costs fit in 16 bits: max(nr, nh) <= 10000.
  std::vector<std::uint16_t> d((nr + 1) * stride);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint16_t& {
    return d[i * stride + j];
  };

  for (std::size_t i = 0; i <= nr; ++i) at(i, 0) = static_cast<std::uint16_t>(i);
  for (std::size_t j = 0; j <= nh; ++j) at(0, j) = static_cast<std::uint16_t>(j);
  for (std::size_t i = 1; i <= nr; ++i) {
    for (std::size_t j = 1; j <= nh; ++j) {
      const std::uint16_t diag =
          static_cast<std::uint16_t>(at(i - 1, j - 1) + (ref[i - 1] != hyp[j - 1]));
      const std::uint16_t del = static_cast<std::uint16_t>(at(i - 1, j) + 1);
      const std::uint16_t ins = static_cast<std::uint16_t>(at(i, j - 1) + 1);
      at(i, j) = std::min({diag, del, ins});
    }
  }

  Alignment out;
  out.cost = at(nr, nh);
  out.ops.reserve(std::max(nr, nh));

  // Backtrace, preferring Match > Substitute > Delete > Insert at equal cost.
  std::size_t i = nr, j = nh;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] &&
        at(i, j) == at(i - 1, j - 1)) {
      out.ops.push_back({EditOp::kMatch, i - 1, j - 1});
      --i, --j;
    } else if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + 1) {
      out.ops.push_back({EditOp::kSubstitute, i - 1, j - 1});
      --i, --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      out.ops.push_back({EditOp::kDelete, i - 1, std::nullopt});
      --i;
    } else {
      out.ops.push_back({EditOp::kInsert, std::nullopt, j - 1});
      --j;
    }
  }
  std::reverse(out.ops.begin(), out.ops.end());
  return out;
}

}  // namespace ctxbias
