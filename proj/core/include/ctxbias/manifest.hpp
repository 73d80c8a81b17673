// ctxbias/manifest.hpp
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

#include <iosfwd>
#include <string>
#include <vector>

#include "ctxbias/context.hpp"
#include "ctxbias/perturb.hpp"
#include "ctxbias/reward.hpp"

// JSONL record schemas shared by the CLI commands; see FORMATS.md for the
// field-by-field reference. All readers throw ParseError with the offending
// line number.

namespace ctxbias {

// {"id": ..., "text": ..., "lang": "en"|"zh"}; lang defaults to "en".
struct ManifestRecord {
  std::string id;
  std::string text;
  std::string lang = "en";
};

// Enforces unique non-empty ids and non-empty text.
std::vector<ManifestRecord> read_manifest(std::istream& in);
std::vector<ManifestRecord> read_manifest_file(const std::string& path);
void write_manifest(std::ostream& out,
                    const std::vector<ManifestRecord>& records);

// {"id", "kind", "entries": [{"w", "pron"?, "distractor"?}], "rendered"}
struct ContextRecord {
  std::string id;
  Context ctx;
};

std::vector<ContextRecord> read_contexts(std::istream& in);
std::vector<ContextRecord> read_contexts_file(const std::string& path);
std::string context_record_to_json(const std::string& id, const Context& ctx);

// {"id", "hyps": [{"text", "loglik"}]}
struct NBestRecord {
  struct Hyp {
    std::string text;
    double loglik = 0.0;
  };
  std::string id;
  std::vector<Hyp> hyps;
};

std::vector<NBestRecord> read_nbest(std::istream& in);
std::vector<NBestRecord> read_nbest_file(const std::string& path);
std::string nbest_record_to_json(const NBestRecord& record);

// {"id", "ref", "ref_perturbed", "ctx", "ctx_perturbed", "swapped"}
std::string perturbed_record_to_json(const std::string& id,
                                     const PerturbedPair& pair);

// {"id", "probs", "wb", "mean_wb", "advantages", "loss", ...extras}
std::string reward_record_to_json(const std::string& id,
                                  const RewardReport& report);

// One word per line, '#' comments ignored.
std::vector<std::string> read_word_file(const std::string& path);

// Rates rendered with 4 decimal places for CLI reports.
std::string format_rate(double rate);

}  // namespace ctxbias
