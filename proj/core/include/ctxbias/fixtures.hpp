// ctxbias/fixtures.hpp
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
#include <vector>

#include "ctxbias/lexicon.hpp"
#include "ctxbias/manifest.hpp"

namespace ctxbias::fixtures {

// Bundled assets under data/: mini dictionaries, the English spelling
// alternative rules, and synthetic train/test manifests for both languages.
struct FixtureSet {
  Lexicon en_lexicon;
  Lexicon zh_lexicon;
  RuleTable en_rules;
  std::vector<ManifestRecord> train_en;
  std::vector<ManifestRecord> test_en;
  std::vector<ManifestRecord> train_zh;
  std::vector<ManifestRecord> test_zh;
};

// Resolution order: CTXBIAS_DATA_DIR environment variable, then the
// configure-time default.
std::string data_dir();

FixtureSet load(const std::string& dir);
inline FixtureSet load() { return load(data_dir()); }

}  // namespace ctxbias::fixtures
