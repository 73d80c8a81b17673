// core/src/fixtures.cpp
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

#include "ctxbias/fixtures.hpp"

#include <cstdlib>

#ifndef CTXBIAS_DEFAULT_DATA_DIR
#define CTXBIAS_DEFAULT_DATA_DIR "data"
#endif

namespace ctxbias::fixtures {

std::string data_dir() {
  if (const char* env = std::getenv("CTXBIAS_DATA_DIR"); env && *env)
    return env;
  return CTXBIAS_DEFAULT_DATA_DIR;
}

FixtureSet load(const std::string& dir) {
  FixtureSet set{
      Lexicon::load_file(dir + "/lexicon_en.dict", PhonemeInventory::arpabet()),
      Lexicon::load_file(dir + "/lexicon_zh.dict", PhonemeInventory::pinyin()),
      RuleTable::load_file(dir + "/rules_en.tsv"),
      read_manifest_file(dir + "/manifest_train_en.jsonl"),
      read_manifest_file(dir + "/manifest_test_en.jsonl"),
      read_manifest_file(dir + "/manifest_train_zh.jsonl"),
      read_manifest_file(dir + "/manifest_test_zh.jsonl"),
  };
  set.en_lexicon.set_rule_table(set.en_rules);
  return set;
}

}  // namespace ctxbias::fixtures
