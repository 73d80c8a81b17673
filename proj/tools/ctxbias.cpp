// tools/ctxbias.cpp
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
//
// Batch front end for the contextual-biasing data pipeline. Subcommands:
//
//   build-context   sample biasing contexts for every utterance
//   perturb         swap keywords with their homophone distractors
//   evaluate        WER / B-WER / U-WER scoring against a bias list
//   reward          biased-MWER reward evaluation over N-best lists
//   simulate        phoneme-confusion mock decoder producing N-best lists
//   vocab-split     common/rare vocabulary split from a training manifest
//   bias-list       artificial biasing list for a test manifest
//
// Exit codes: 0 success, 2 malformed input, 3 id mismatch.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctxbias/context.hpp"
#include "ctxbias/corpus.hpp"
#include "ctxbias/error.hpp"
#include "ctxbias/manifest.hpp"
#include "ctxbias/metrics.hpp"
#include "ctxbias/perturb.hpp"
#include "ctxbias/protocol.hpp"
#include "ctxbias/reward.hpp"
#include "ctxbias/rng.hpp"
#include "ctxbias/simdec.hpp"
#include "ctxbias/text.hpp"
#include "json.hpp"

namespace {

using namespace ctxbias;
using ordered_json = nlohmann::ordered_json;

struct CommonOpts {
  std::string lang = "en";
  std::uint64_t seed = protocol::kDefaultSeed;
  std::string output = "-";
};

TokenizationMode token_mode(const std::string& lang) {
  return lang == "zh" ? TokenizationMode::kCharsZH : TokenizationMode::kWordsEN;
}

Lexicon load_lexicon(const std::string& path, const std::string& lang,
                     const std::string& rules_path) {
  Lexicon lex = Lexicon::load_file(path, lang == "zh"
                                             ? PhonemeInventory::pinyin()
                                             : PhonemeInventory::arpabet());
  if (!rules_path.empty()) lex.set_rule_table(RuleTable::load_file(rules_path));
  return lex;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path == "-") return std::cout;
  file.open(path);
  if (!file) throw Error("cannot open output file: " + path);
  return file;
}

std::map<std::string, ManifestRecord> manifest_by_id(const std::string& path) {
  std::map<std::string, ManifestRecord> out;
  for (auto& r : read_manifest_file(path)) out.emplace(r.id, std::move(r));
  return out;
}

double round4(double x) { return std::stod(format_rate(x)); }

int cmd_build_context(const CommonOpts& opts, const std::string& manifest_path,
                      const std::string& lexicon_path,
                      const std::string& rules_path,
                      const std::string& pool_path,
                      const ContextPolicy& policy) {
  policy.validate();
  const Lexicon lex = load_lexicon(lexicon_path, opts.lang, rules_path);
  const std::vector<std::string> pool =
      pool_path.empty() ? lex.vocabulary() : read_word_file(pool_path);

  std::ofstream file;
  std::ostream& out = open_output(opts.output, file);
  for (const auto& rec : read_manifest_file(manifest_path)) {
    Rng rng(derive_seed(opts.seed, rec.id));
    const auto reference = split_whitespace(rec.text);
    const auto keywords = select_keywords(reference, policy, rng);

    std::set<std::string> kw;
    for (const auto& k : keywords) kw.insert(casefold(k));
    std::vector<std::string> filtered;
    filtered.reserve(pool.size());
    for (const auto& p : pool)
      if (!kw.count(casefold(p))) filtered.push_back(p);

    const auto cg = build_grapheme_context(keywords, filtered, policy, rng);
    const auto ctx = sample_pronunciation_context(cg, reference, lex, policy, rng);
    out << context_record_to_json(rec.id, ctx) << '\n';
  }
  return 0;
}

int cmd_perturb(const CommonOpts& opts, const std::string& contexts_path,
                const std::string& manifest_path,
                const std::string& lexicon_path,
                const std::string& rules_path) {
  const Lexicon lex = load_lexicon(lexicon_path, opts.lang, rules_path);
  const auto manifest = manifest_by_id(manifest_path);

  std::ofstream file;
  std::ostream& out = open_output(opts.output, file);
  std::size_t skipped = 0;
  std::vector<std::string> missing;
  for (const auto& rec : read_contexts_file(contexts_path)) {
    const bool has_distractor =
        rec.ctx.kind == ContextKind::kGPGD &&
        std::any_of(rec.ctx.entries.begin(), rec.ctx.entries.end(),
                    [](const ContextEntry& e) { return e.distractor.has_value(); });
    if (!has_distractor) {
      ++skipped;
      continue;
    }
    const auto it = manifest.find(rec.id);
    if (it == manifest.end()) {
      missing.push_back(rec.id);
      continue;
    }
    const auto pair =
        perturb_pair(split_whitespace(it->second.text), rec.ctx, lex);
    out << perturbed_record_to_json(rec.id, pair) << '\n';
  }
  if (!missing.empty()) throw IdMismatchError(missing);
  if (skipped)
    std::cerr << "perturb: skipped " << skipped
              << " context(s) without distractor entries\n";
  return 0;
}

int cmd_evaluate(const CommonOpts& opts, const std::string& refs_path,
                 const std::string& hyps_path, const std::string& bias_path,
                 InsertionAttribution ins_attr) {
  const auto refs = read_manifest_file(refs_path);
  const auto hyps = manifest_by_id(hyps_path);

  std::vector<std::string> missing;
  for (const auto& r : refs)
    if (!hyps.count(r.id)) missing.push_back(r.id);
  if (refs.size() != hyps.size() || !missing.empty()) {
    std::set<std::string> ref_ids;
    for (const auto& r : refs) ref_ids.insert(r.id);
    for (const auto& [id, rec] : hyps)
      if (!ref_ids.count(id)) missing.push_back(id);
    throw IdMismatchError(missing);
  }

  const auto mode = token_mode(opts.lang);
  const auto bias = BiasSet::from_words(read_word_file(bias_path), mode);
  std::vector<std::vector<std::string>> ref_tokens, hyp_tokens;
  ref_tokens.reserve(refs.size());
  for (const auto& r : refs) {
    ref_tokens.push_back(tokenize(r.text, mode));
    hyp_tokens.push_back(tokenize(hyps.at(r.id).text, mode));
  }
  const auto report = biased_wer(ref_tokens, hyp_tokens, bias, ins_attr);

  ordered_json j;
  j["utterances"] = report.utterances;
  j["wer"] = round4(report.wer);
  if (report.bwer)
    j["bwer"] = round4(*report.bwer);
  else
    j["bwer"] = "undefined";
  if (report.uwer)
    j["uwer"] = round4(*report.uwer);
  else
    j["uwer"] = "undefined";
  auto counts = [](const ErrorCounts& c) {
    ordered_json b;
    b["sub"] = c.sub;
    b["del"] = c.del;
    b["ins"] = c.ins;
    b["ref"] = c.ref_count;
    return b;
  };
  j["biased"] = counts(report.breakdown.biased);
  j["unbiased"] = counts(report.breakdown.unbiased);

  std::ofstream file;
  open_output(opts.output, file) << j.dump(2) << '\n';
  return 0;
}

int cmd_reward(const CommonOpts& opts, const std::string& nbest_path,
               const std::string& refs_path, const std::string& bias_path,
               const RewardConfig& config,
               const std::optional<std::vector<double>>& ce_terms,
               double ce_weight) {
  const auto refs = manifest_by_id(refs_path);
  const auto mode = token_mode(opts.lang);
  const auto bias = BiasSet::from_words(read_word_file(bias_path), mode);

  std::ofstream file;
  std::ostream& out = open_output(opts.output, file);
  std::vector<std::string> missing;
  for (const auto& rec : read_nbest_file(nbest_path)) {
    const auto it = refs.find(rec.id);
    if (it == refs.end()) {
      missing.push_back(rec.id);
      continue;
    }
    NBestList nbest;
    for (const auto& h : rec.hyps)
      nbest.hyps.push_back({tokenize(h.text, mode), h.loglik});
    const auto report =
        mwer_biased_loss(nbest, tokenize(it->second.text, mode), bias, config);
    if (!ce_terms) {
      out << reward_record_to_json(rec.id, report) << '\n';
      continue;
    }
    const double ce_sum =
        aggregate_ce_loss((*ce_terms)[0], (*ce_terms)[1], (*ce_terms)[2]);
    ordered_json j = ordered_json::parse(reward_record_to_json(rec.id, report));
    j["ce_sum"] = ce_sum;
    j["combined"] = combined_objective(report.loss, ce_sum, ce_weight);
    out << j.dump() << '\n';
  }
  if (!missing.empty()) throw IdMismatchError(missing);
  return 0;
}

int cmd_simulate(const CommonOpts& opts, const std::string& manifest_path,
                 const std::string& lexicon_path, const std::string& rules_path,
                 const std::string& contexts_path, const ConfusionModel& model,
                 std::size_t n) {
  model.validate();
  const Lexicon lex = load_lexicon(lexicon_path, opts.lang, rules_path);
  std::map<std::string, Context> contexts;
  if (!contexts_path.empty())
    for (auto& rec : read_contexts_file(contexts_path))
      contexts.emplace(rec.id, std::move(rec.ctx));

  std::ofstream file;
  std::ostream& out = open_output(opts.output, file);
  std::vector<std::string> missing;
  static const Context kEmptyContext;
  for (const auto& rec : read_manifest_file(manifest_path)) {
    const Context* ctx = &kEmptyContext;
    if (!contexts_path.empty()) {
      const auto it = contexts.find(rec.id);
      if (it == contexts.end()) {
        missing.push_back(rec.id);
        continue;
      }
      ctx = &it->second;
    }
    Rng rng(derive_seed(opts.seed, rec.id));
    const auto nbest =
        simulate_nbest(split_whitespace(rec.text), *ctx, lex, model, n, rng);
    NBestRecord record;
    record.id = rec.id;
    for (const auto& h : nbest.hyps)
      record.hyps.push_back({join(h.tokens, " "), h.loglik});
    out << nbest_record_to_json(record) << '\n';
  }
  if (!missing.empty()) throw IdMismatchError(missing);
  return 0;
}

int cmd_vocab_split(const CommonOpts& opts, const std::string& manifest_path,
                    std::size_t common_size, const std::string& rare_out) {
  FreqTable table;
  for (const auto& rec : read_manifest_file(manifest_path))
    table.add(tokenize(rec.text, TokenizationMode::kWordsEN));
  const auto split = VocabSplit::from_frequencies(table, common_size);

  std::ofstream file;
  split.write_common(open_output(opts.output, file));
  if (!rare_out.empty()) {
    std::ofstream rare(rare_out);
    if (!rare) throw Error("cannot open output file: " + rare_out);
    split.write_rare_pool(rare);
  }
  return 0;
}

int cmd_bias_list(const CommonOpts& opts, const std::string& manifest_path,
                  const std::string& common_path, const std::string& rare_path,
                  const std::string& size_arg) {
  const auto split = VocabSplit::from_word_lists(
      read_word_file(common_path),
      rare_path.empty() ? std::vector<std::string>{}
                        : read_word_file(rare_path));
  std::vector<std::vector<std::string>> refs;
  for (const auto& rec : read_manifest_file(manifest_path))
    refs.push_back(tokenize(rec.text, TokenizationMode::kWordsEN));

  std::size_t n = 0;
  if (size_arg == "gt") {
    std::set<std::string> required;
    for (const auto& ref : refs)
      for (const auto& tok : ref)
        if (split.is_rare(tok)) required.insert(tok);
    n = required.size();
  } else {
    try {
      n = static_cast<std::size_t>(std::stoull(size_arg));
    } catch (const std::exception&) {
      throw Error("--size expects a number or 'gt', got '" + size_arg + "'");
    }
  }

  Rng rng(opts.seed);
  const auto list = build_bias_list(refs, split, n, rng);
  std::ofstream file;
  std::ostream& out = open_output(opts.output, file);
  for (const auto& w : list) out << w << '\n';
  return 0;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--lang", opts.lang, "Language: en or zh (default: en)")
      ->check(CLI::IsMember({"en", "zh"}));
  cmd->add_option("--seed", opts.seed, "Global random seed (default: 17)");
  cmd->add_option("--output", opts.output,
                  "Output path, '-' for stdout (default: -)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ctxbias: contextual-biasing data pipeline "
      "(context construction, homophone perturbation, biased-MWER rewards, "
      "B-WER evaluation)"};
  app.require_subcommand(1);

  // ---- build-context ----
  CommonOpts bc_opts;
  std::string bc_manifest, bc_lexicon, bc_rules, bc_pool;
  ContextPolicy bc_policy;
  auto* bc = app.add_subcommand(
      "build-context",
      "Sample a biasing context per utterance: keywords from the reference "
      "plus 1-100 arbitrary words, then the pronunciation-guided branch "
      "(grapheme-phoneme with probability P1, grapheme-phoneme plus "
      "homophone distractors with probability P2, grapheme-only otherwise).");
  bc->add_option("--manifest", bc_manifest, "Utterance manifest JSONL")
      ->required();
  bc->add_option("--lexicon", bc_lexicon, "Pronunciation dictionary")
      ->required();
  bc->add_option("--rules", bc_rules, "Spelling-alternative rule table (en)");
  bc->add_option("--pool", bc_pool,
                 "Arbitrary-word pool file (default: lexicon vocabulary)");
  bc->add_option("--p1", bc_policy.p1,
                 "Grapheme-phoneme branch probability (default: 1/3)");
  bc->add_option("--p2", bc_policy.p2,
                 "Distractor branch probability (default: 1/3)");
  bc->add_option("--min-arbitrary", bc_policy.min_arbitrary,
                 "Minimum arbitrary words per context (default: 1)");
  bc->add_option("--max-arbitrary", bc_policy.max_arbitrary,
                 "Maximum arbitrary words per context (default: 100)");
  bc->add_option("--max-keywords", bc_policy.max_keywords,
                 "Keywords sampled per utterance: uniform in [1, min(this, "
                 "distinct words)] (default: 3)");
  add_common(bc, bc_opts);

  // ---- perturb ----
  CommonOpts pt_opts;
  std::string pt_contexts, pt_manifest, pt_lexicon, pt_rules;
  auto* pt = app.add_subcommand(
      "perturb",
      "Swap every keyword that carries a homophone distractor: the reference "
      "gets the distractor, the context entry (w, T(w), w') becomes "
      "(w', T(w'), w). Contexts without distractor entries are skipped with "
      "a warning count.");
  pt->add_option("--contexts", pt_contexts, "Context JSONL from build-context")
      ->required();
  pt->add_option("--manifest", pt_manifest, "Utterance manifest JSONL")
      ->required();
  pt->add_option("--lexicon", pt_lexicon, "Pronunciation dictionary")
      ->required();
  pt->add_option("--rules", pt_rules, "Spelling-alternative rule table (en)");
  add_common(pt, pt_opts);

  // ---- evaluate ----
  CommonOpts ev_opts;
  std::string ev_refs, ev_hyps, ev_bias, ev_ins = "hyp";
  auto* ev = app.add_subcommand(
      "evaluate",
      "Corpus WER (en) / CER (zh) with the biased/unbiased split: B-WER over "
      "bias-list reference tokens, U-WER over the rest. B-WER with no biased "
      "reference tokens is reported as \"undefined\", never 0.");
  ev->add_option("--refs", ev_refs, "Reference manifest JSONL")->required();
  ev->add_option("--hyps", ev_hyps, "Hypothesis manifest JSONL")->required();
  ev->add_option("--bias", ev_bias, "Bias list, one word per line")
      ->required();
  ev->add_option("--insertion-attribution", ev_ins,
                 "hyp: insertions of bias-list words count as biased "
                 "(default); none: insertions are always unbiased")
      ->check(CLI::IsMember({"hyp", "none"}));
  add_common(ev, ev_opts);

  // ---- reward ----
  CommonOpts rw_opts;
  std::string rw_nbest, rw_refs, rw_bias, rw_wb = "count", rw_ins = "hyp";
  std::vector<double> rw_ce_terms;
  double rw_ce_weight = protocol::kCeWeight;
  auto* rw = app.add_subcommand(
      "reward",
      "Biased-MWER evaluation per N-best list: normalized likelihoods, "
      "per-hypothesis biased error counts W_b, advantages against the list "
      "mean, and loss = (1/N) * sum p_i (W_b_i - mean). Lists conventionally "
      "hold N = 8 hypotheses (the simulate default); any N >= 1 is accepted.");
  rw->add_option("--nbest", rw_nbest, "N-best JSONL")->required();
  rw->add_option("--refs", rw_refs, "Reference manifest JSONL")->required();
  rw->add_option("--bias", rw_bias, "Bias list, one word per line")
      ->required();
  rw->add_option("--wb-mode", rw_wb,
                 "W_b statistic: count (biased error count, default) or rate")
      ->check(CLI::IsMember({"count", "rate"}));
  rw->add_option("--insertion-attribution", rw_ins,
                 "hyp (default) or none, as in evaluate")
      ->check(CLI::IsMember({"hyp", "none"}));
  rw->add_option("--ce-terms", rw_ce_terms,
                 "Three externally computed CE values (G, GP, GPGD); adds "
                 "their sum and the combined objective to every record")
      ->expected(3);
  rw->add_option("--ce-weight", rw_ce_weight,
                 "Aggregated-CE weight in the combined objective "
                 "(default: 0.01)");
  add_common(rw, rw_opts);

  // ---- simulate ----
  CommonOpts sm_opts;
  std::string sm_manifest, sm_lexicon, sm_rules, sm_contexts;
  ConfusionModel sm_model;
  std::size_t sm_n = protocol::kNBestSize;
  auto* sm = app.add_subcommand(
      "simulate",
      "Phoneme-confusion mock decoder: each reference word is replaced by a "
      "uniform homophone with probability p-confuse; scores favor hypotheses "
      "whose words appear in the supplied context.");
  sm->add_option("--manifest", sm_manifest, "Utterance manifest JSONL")
      ->required();
  sm->add_option("--lexicon", sm_lexicon, "Pronunciation dictionary")
      ->required();
  sm->add_option("--rules", sm_rules, "Spelling-alternative rule table (en)");
  sm->add_option("--contexts", sm_contexts,
                 "Context JSONL; enables the bias-boost scoring term");
  sm->add_option("--p-confuse", sm_model.p_confuse,
                 "Per-word homophone confusion probability (default: 0.3)");
  sm->add_option("--bias-boost", sm_model.bias_boost,
                 "Log-likelihood bonus per hypothesis word present in the "
                 "context (default: 0)");
  sm->add_option("--base-scale", sm_model.base_loglik_scale,
                 "Log-likelihood penalty per confused word (default: 1)");
  sm->add_option("-n,--nbest", sm_n, "Hypotheses per utterance (default: 8)");
  add_common(sm, sm_opts);

  // ---- vocab-split ----
  CommonOpts vs_opts;
  std::string vs_manifest, vs_rare_out;
  std::size_t vs_common = protocol::kCommonVocabSize;
  auto* vs = app.add_subcommand(
      "vocab-split",
      "Count training-manifest word frequencies and write the common "
      "vocabulary (the most frequent words; ties broken lexicographically), "
      "one word per line, sorted. All other words are rare.");
  vs->add_option("--manifest", vs_manifest, "Training manifest JSONL")
      ->required();
  vs->add_option("--common-size", vs_common,
                 "Number of most-frequent words considered common "
                 "(default: 5000)");
  vs->add_option("--rare-out", vs_rare_out,
                 "Also write the rare remainder of the training vocabulary "
                 "(the padding pool for bias-list)");
  add_common(vs, vs_opts);

  // ---- bias-list ----
  CommonOpts bl_opts;
  std::string bl_manifest, bl_common, bl_rare, bl_size = "gt";
  auto* bl = app.add_subcommand(
      "bias-list",
      "Artificial biasing list: every rare word of the test references, "
      "padded with uniformly sampled rare-vocabulary distractors to the "
      "requested size. Protocol sizes: 100, 500, 1000, 2000 (English) and "
      "187, 400, 600 (Mandarin); 'gt' keeps exactly the ground-truth "
      "keywords.");
  bl->add_option("--manifest", bl_manifest, "Test manifest JSONL")->required();
  bl->add_option("--common", bl_common, "Common vocabulary from vocab-split")
      ->required();
  bl->add_option("--rare-pool", bl_rare,
                 "Rare vocabulary file (vocab-split --rare-out); needed when "
                 "padding beyond the ground-truth keywords");
  bl->add_option("--size", bl_size, "Target list size or 'gt' (default: gt)");
  add_common(bl, bl_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*bc)
      return cmd_build_context(bc_opts, bc_manifest, bc_lexicon, bc_rules,
                               bc_pool, bc_policy);
    if (*pt)
      return cmd_perturb(pt_opts, pt_contexts, pt_manifest, pt_lexicon,
                         pt_rules);
    if (*ev)
      return cmd_evaluate(ev_opts, ev_refs, ev_hyps, ev_bias,
                          ev_ins == "hyp" ? InsertionAttribution::kByHypWord
                                          : InsertionAttribution::kNeverBiased);
    if (*rw) {
      RewardConfig config;
      config.wb_mode = rw_wb == "count" ? WbMode::kCount : WbMode::kRate;
      config.ins_attr = rw_ins == "hyp" ? InsertionAttribution::kByHypWord
                                        : InsertionAttribution::kNeverBiased;
      std::optional<std::vector<double>> ce_sum;
      if (!rw_ce_terms.empty()) ce_sum = rw_ce_terms;
      return cmd_reward(rw_opts, rw_nbest, rw_refs, rw_bias, config, ce_sum,
                        rw_ce_weight);
    }
    if (*sm)
      return cmd_simulate(sm_opts, sm_manifest, sm_lexicon, sm_rules,
                          sm_contexts, sm_model, sm_n);
    if (*vs) return cmd_vocab_split(vs_opts, vs_manifest, vs_common, vs_rare_out);
    if (*bl)
      return cmd_bias_list(bl_opts, bl_manifest, bl_common, bl_rare, bl_size);
  } catch (const IdMismatchError& e) {
    std::cerr << "ctxbias: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "ctxbias: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
