// core/src/context.cpp
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

#include "ctxbias/context.hpp"

#include <algorithm>

#include "ctxbias/error.hpp"
#include "ctxbias/text.hpp"

namespace ctxbias {

std::string_view to_string(ContextKind kind) {
  switch (kind) {
    case ContextKind::kG:
      return "G";
    case ContextKind::kGP:
      return "GP";
    case ContextKind::kGPGD:
      return "GPGD";
  }
  return "G";
}

ContextKind context_kind_from_string(std::string_view s) {
  if (s == "G") return ContextKind::kG;
  if (s == "GP") return ContextKind::kGP;
  if (s == "GPGD") return ContextKind::kGPGD;
  throw ParseError("unknown context kind '" + std::string(s) + "'");
}

void Context::validate() const {
  for (const auto& e : entries) {
    if (e.word.empty()) throw Error("context entry with empty word");
    if (e.distractor && !e.pron)
      throw Error("distractor without pronunciation on '" + e.word + "'");
    if (e.distractor && *e.distractor == e.word)
      throw Error("distractor equals its keyword '" + e.word + "'");
    switch (kind) {
      case ContextKind::kG:
        if (e.pron || e.distractor)
          throw Error("grapheme-only context entry '" + e.word +
                      "' carries annotations");
        break;
      case ContextKind::kGP:
        if (!e.pron)
          throw Error("GP context entry '" + e.word + "' lacks pronunciation");
        if (e.distractor)
          throw Error("GP context entry '" + e.word + "' carries a distractor");
        break;
      case ContextKind::kGPGD:
        if (!e.pron)
          throw Error("GPGD context entry '" + e.word +
                      "' lacks pronunciation");
        break;
    }
  }
}

void ContextPolicy::validate() const {
  if (p1 < 0.0 || p2 < 0.0 || p1 + p2 > 1.0)
    throw Error("branch probabilities must satisfy p1,p2 >= 0 and p1+p2 <= 1");
  if (min_arbitrary < 1 || min_arbitrary > max_arbitrary)
    throw Error("arbitrary-word range must satisfy 1 <= min <= max");
  if (max_keywords < 1) throw Error("max_keywords must be >= 1");
}

std::vector<std::string> select_keywords(
    const std::vector<std::string>& reference, const ContextPolicy& policy,
    Rng& rng) {
  policy.validate();
  if (reference.empty()) throw EmptyReferenceError();

  // Distinct words in first-occurrence order, case-folded identity.
  std::vector<std::string> distinct;
  std::set<std::string> seen;
  for (const auto& tok : reference)
    if (seen.insert(casefold(tok)).second) distinct.push_back(tok);

  const std::size_t k_max = std::min(policy.max_keywords, distinct.size());
  const std::size_t k = static_cast<std::size_t>(
      rng.uniform_int(1, static_cast<std::int64_t>(k_max)));
  std::vector<std::string> keywords;
  keywords.reserve(k);
  for (std::size_t i : rng.sample_indices(distinct.size(), k))
    keywords.push_back(distinct[i]);
  return keywords;
}

Context build_grapheme_context(const std::vector<std::string>& keywords,
                               const std::vector<std::string>& pool,
                               const ContextPolicy& policy, Rng& rng) {
  policy.validate();
  std::set<std::string> keyword_set;
  for (const auto& k : keywords) keyword_set.insert(casefold(k));
  for (const auto& p : pool)
    if (keyword_set.count(casefold(p))) throw PoolOverlapError(p);

  std::size_t m = static_cast<std::size_t>(
      rng.uniform_int(static_cast<std::int64_t>(policy.min_arbitrary),
                      static_cast<std::int64_t>(policy.max_arbitrary)));
  m = std::min(m, pool.size());

  std::vector<std::string> words = keywords;
  for (std::size_t i : rng.sample_indices(pool.size(), m))
    words.push_back(pool[i]);
  rng.shuffle(words);

  Context ctx;
  ctx.kind = ContextKind::kG;
  ctx.entries.reserve(words.size());
  for (auto& w : words) ctx.entries.push_back({std::move(w), {}, {}});
  return ctx;
}

std::optional<std::string> pick_distractor(const Lexicon& lexicon,
                                           const std::string& word,
                                           const std::set<std::string>& taken) {
  if (!lexicon.contains(word)) return std::nullopt;
  const auto exact = lexicon.homophones(word);
  for (const auto& candidate : exact)
    if (!taken.count(casefold(candidate))) return candidate;
  const auto near = lexicon.near_homophones(word, 1);
  for (const auto& candidate : near)
    if (!taken.count(casefold(candidate))) return candidate;
  return std::nullopt;
}

Context sample_pronunciation_context(const Context& grapheme_ctx,
                               const std::vector<std::string>& reference,
                               const Lexicon& lexicon,
                               const ContextPolicy& policy, Rng& rng) {
  policy.validate();
  if (grapheme_ctx.kind != ContextKind::kG)
    throw Error("sample_pronunciation_context expects a grapheme-only context");
  grapheme_ctx.validate();

  const double r = rng.uniform_real();
  if (r >= policy.p1 + policy.p2) return grapheme_ctx;

  std::set<std::string> ref_words;
  for (const auto& tok : reference) ref_words.insert(casefold(tok));

  Context out;
  if (r < policy.p1) {
    out.kind = ContextKind::kGP;
    for (const auto& e : grapheme_ctx.entries)
      out.entries.push_back({e.word, lexicon.g2p(e.word), {}});
    return out;
  }
  out.kind = ContextKind::kGPGD;
  // Distractors must not collide with context words, reference words, or
  // each other: the keyword -> distractor map stays invertible, which is
  // what makes the perturbation step an involution.
  std::set<std::string> taken = ref_words;
  for (const auto& e : grapheme_ctx.entries) taken.insert(casefold(e.word));
  for (const auto& e : grapheme_ctx.entries) {
    ContextEntry entry{e.word, lexicon.g2p(e.word), {}};
    if (ref_words.count(casefold(e.word))) {
      entry.distractor = pick_distractor(lexicon, e.word, taken);
      if (entry.distractor) taken.insert(casefold(*entry.distractor));
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

std::string render_context(const Context& ctx) {
  std::string out;
  for (std::size_t i = 0; i < ctx.entries.size(); ++i) {
    const auto& e = ctx.entries[i];
    if (i) out += ", ";
    out += e.word;
    if (e.pron) out += " (" + e.pron->to_string() + ")";
    if (e.distractor) out += ", " + *e.distractor;
  }
  return out;
}

Context parse_context(std::string_view text, ContextKind kind) {
  Context ctx;
  ctx.kind = kind;
  if (text.empty()) return ctx;

  std::vector<std::string> elements;
  std::size_t start = 0;
  for (std::size_t pos; (pos = text.find(", ", start)) != std::string_view::npos;
       start = pos + 2)
    elements.emplace_back(text.substr(start, pos - start));
  elements.emplace_back(text.substr(start));

  for (const auto& el : elements) {
    if (el.empty()) throw ParseError("empty context element");
    const std::size_t open = el.find(" (");
    if (open != std::string::npos) {
      if (el.back() != ')')
        throw ParseError("unterminated pronunciation in '" + el + "'");
      ContextEntry entry;
      entry.word = el.substr(0, open);
      PhonemeSeq seq;
      seq.symbols =
          split_whitespace(el.substr(open + 2, el.size() - open - 3));
      if (entry.word.empty() || seq.symbols.empty())
        throw ParseError("malformed context element '" + el + "'");
      entry.pron = std::move(seq);
      ctx.entries.push_back(std::move(entry));
    } else if (kind == ContextKind::kG) {
      ctx.entries.push_back({el, {}, {}});
    } else if (kind == ContextKind::kGPGD) {
      if (ctx.entries.empty() || !ctx.entries.back().pron ||
          ctx.entries.back().distractor)
        throw ParseError("distractor '" + el + "' has no carrier entry");
      ctx.entries.back().distractor = el;
    } else {
      throw ParseError("bare word '" + el + "' in a GP context");
    }
  }
  ctx.validate();
  return ctx;
}

std::set<std::string> build_bias_list(
    const std::vector<std::vector<std::string>>& test_refs,
    const VocabSplit& split, std::size_t n, Rng& rng) {
  std::set<std::string> list;
  for (const auto& ref : test_refs)
    for (const auto& tok : ref)
      if (split.is_rare(tok)) list.insert(tok);

  if (n < list.size()) throw ListTooSmallError(list.size(), n);

  std::vector<std::string> candidates;
  candidates.reserve(split.rare_pool().size());
  for (const auto& w : split.rare_pool())
    if (!list.count(w)) candidates.push_back(w);

  const std::size_t need = n - list.size();
  if (need > candidates.size())
    throw Error("rare vocabulary too small to pad bias list to " +
                std::to_string(n) + " (have " +
                std::to_string(list.size() + candidates.size()) + ")");
  for (std::size_t i : rng.sample_indices(candidates.size(), need))
    list.insert(candidates[i]);
  return list;
}

}  // namespace ctxbias
