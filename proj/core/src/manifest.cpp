// core/src/manifest.cpp
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

#include "ctxbias/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>

#include "ctxbias/error.hpp"
#include "ctxbias/text.hpp"
#include "json.hpp"

namespace ctxbias {

namespace {

using ordered_json = nlohmann::ordered_json;

// Parses every non-empty line, reporting the 1-based line number on failure.
template <class Fn>
void for_each_json_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    try {
      fn(j);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad record: ") + e.what(), line_no);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

ordered_json context_to_json(const Context& ctx) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : ctx.entries) {
    ordered_json je;
    je["w"] = e.word;
    if (e.pron) je["pron"] = e.pron->to_string();
    if (e.distractor) je["distractor"] = *e.distractor;
    entries.push_back(std::move(je));
  }
  ordered_json j;
  j["kind"] = std::string(to_string(ctx.kind));
  j["entries"] = std::move(entries);
  j["rendered"] = render_context(ctx);
  return j;
}

Context context_from_json(const ordered_json& j) {
  Context ctx;
  ctx.kind = context_kind_from_string(j.at("kind").get<std::string>());
  for (const auto& je : j.at("entries")) {
    ContextEntry e;
    e.word = je.at("w").get<std::string>();
    if (je.contains("pron")) {
      PhonemeSeq seq;
      seq.symbols = split_whitespace(je["pron"].get<std::string>());
      e.pron = std::move(seq);
    }
    if (je.contains("distractor"))
      e.distractor = je["distractor"].get<std::string>();
    ctx.entries.push_back(std::move(e));
  }
  ctx.validate();
  return ctx;
}

}  // namespace

std::vector<ManifestRecord> read_manifest(std::istream& in) {
  std::vector<ManifestRecord> records;
  std::set<std::string> seen;
  for_each_json_line(in, [&](const ordered_json& j) {
    ManifestRecord r;
    r.id = j.at("id").get<std::string>();
    r.text = j.at("text").get<std::string>();
    if (j.contains("lang")) r.lang = j["lang"].get<std::string>();
    if (r.id.empty()) throw Error("empty id");
    if (split_whitespace(r.text).empty()) throw Error("empty text");
    if (r.lang != "en" && r.lang != "zh")
      throw Error("lang must be en or zh, got '" + r.lang + "'");
    if (!seen.insert(r.id).second) throw Error("duplicate id '" + r.id + "'");
    records.push_back(std::move(r));
  });
  return records;
}

std::vector<ManifestRecord> read_manifest_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_manifest(in);
}

void write_manifest(std::ostream& out,
                    const std::vector<ManifestRecord>& records) {
  for (const auto& r : records) {
    ordered_json j;
    j["id"] = r.id;
    j["text"] = r.text;
    j["lang"] = r.lang;
    out << j.dump() << '\n';
  }
}

std::vector<ContextRecord> read_contexts(std::istream& in) {
  std::vector<ContextRecord> records;
  std::set<std::string> seen;
  for_each_json_line(in, [&](const ordered_json& j) {
    ContextRecord r;
    r.id = j.at("id").get<std::string>();
    if (r.id.empty()) throw Error("empty id");
    if (!seen.insert(r.id).second) throw Error("duplicate id '" + r.id + "'");
    r.ctx = context_from_json(j);
    records.push_back(std::move(r));
  });
  return records;
}

std::vector<ContextRecord> read_contexts_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_contexts(in);
}

std::string context_record_to_json(const std::string& id, const Context& ctx) {
  ordered_json body = context_to_json(ctx);
  ordered_json j;
  j["id"] = id;
  for (auto& [key, value] : body.items()) j[key] = std::move(value);
  return j.dump();
}

std::vector<NBestRecord> read_nbest(std::istream& in) {
  std::vector<NBestRecord> records;
  std::set<std::string> seen;
  for_each_json_line(in, [&](const ordered_json& j) {
    NBestRecord r;
    r.id = j.at("id").get<std::string>();
    if (r.id.empty()) throw Error("empty id");
    if (!seen.insert(r.id).second) throw Error("duplicate id '" + r.id + "'");
    for (const auto& jh : j.at("hyps")) {
      NBestRecord::Hyp h;
      h.text = jh.at("text").get<std::string>();
      h.loglik = jh.at("loglik").get<double>();
      r.hyps.push_back(std::move(h));
    }
    if (r.hyps.empty()) throw Error("record '" + r.id + "' has no hypotheses");
    records.push_back(std::move(r));
  });
  return records;
}

std::vector<NBestRecord> read_nbest_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_nbest(in);
}

std::string nbest_record_to_json(const NBestRecord& record) {
  ordered_json hyps = ordered_json::array();
  for (const auto& h : record.hyps) {
    ordered_json jh;
    jh["text"] = h.text;
    jh["loglik"] = h.loglik;
    hyps.push_back(std::move(jh));
  }
  ordered_json j;
  j["id"] = record.id;
  j["hyps"] = std::move(hyps);
  return j.dump();
}

std::string perturbed_record_to_json(const std::string& id,
                                     const PerturbedPair& pair) {
  ordered_json j;
  j["id"] = id;
  j["ref"] = join(pair.original_ref, " ");
  j["ref_perturbed"] = join(pair.perturbed_ref, " ");
  j["ctx"] = context_to_json(pair.original_ctx);
  j["ctx_perturbed"] = context_to_json(pair.perturbed_ctx);
  ordered_json swapped = ordered_json::array();
  for (const auto& [w, d] : pair.swapped)
    swapped.push_back(ordered_json::array({w, d}));
  j["swapped"] = std::move(swapped);
  return j.dump();
}

std::string reward_record_to_json(const std::string& id,
                                  const RewardReport& report) {
  ordered_json j;
  j["id"] = id;
  j["probs"] = report.probs;
  j["wb"] = report.wb;
  j["mean_wb"] = report.mean_wb;
  j["advantages"] = report.advantages;
  j["loss"] = report.loss;
  return j.dump();
}

std::vector<std::string> read_word_file(const std::string& path) {
  auto in = open_or_throw(path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.push_back(line);
  }
  return words;
}

std::string format_rate(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", rate);
  return buf;
}

}  // namespace ctxbias
