// ctxbias/text.hpp
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
#include <string_view>
#include <vector>

namespace ctxbias {

// ASCII case folding. Word identity in this toolkit is ASCII-insensitive;
// non-ASCII bytes (Mandarin text) pass through untouched.
std::string casefold(std::string_view s);

// Whitespace-delimited tokens, surface forms preserved.
std::vector<std::string> split_whitespace(std::string_view s);

// One string per UTF-8 code point. Invalid lead bytes are passed through as
// single bytes rather than rejected.
std::vector<std::string> utf8_chars(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace ctxbias
