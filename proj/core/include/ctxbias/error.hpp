// ctxbias/error.hpp
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
#include <stdexcept>
#include <string>
#include <vector>

namespace ctxbias {

// Base class for everything this library throws on bad input or misuse.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file content (dictionary lines, JSONL records, flag values).
// line() is 0 when no line number applies.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Dictionary pronunciation used a symbol outside the declared inventory.
class UnknownSymbolError : public ParseError {
 public:
  UnknownSymbolError(const std::string& word, const std::string& symbol,
                     std::size_t line = 0)
      : ParseError("unknown symbol '" + symbol + "' in entry '" + word + "'",
                   line),
        word_(word),
        symbol_(symbol) {}
  const std::string& word() const { return word_; }
  const std::string& symbol() const { return symbol_; }

 private:
  std::string word_;
  std::string symbol_;
};

// Word absent from the lexicon where presence is a precondition.
class UnknownWordError : public Error {
 public:
  explicit UnknownWordError(const std::string& word)
      : Error("unknown word '" + word + "'"), word_(word) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

// OOV word that the letter-to-sound fallback could not map either.
class OovUnmappableError : public Error {
 public:
  explicit OovUnmappableError(const std::string& word)
      : Error("no pronunciation derivable for '" + word + "'"), word_(word) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

class EmptyReferenceError : public Error {
 public:
  EmptyReferenceError() : Error("reference token list is empty") {}
};

class EmptyReferenceCorpusError : public Error {
 public:
  EmptyReferenceCorpusError()
      : Error("reference corpus contains zero tokens") {}
};

class LengthMismatchError : public Error {
 public:
  LengthMismatchError(std::size_t refs, std::size_t hyps)
      : Error("reference/hypothesis list sizes differ: " +
              std::to_string(refs) + " vs " + std::to_string(hyps)) {}
};

// Arbitrary-word pool shares a word with the keyword list.
class PoolOverlapError : public Error {
 public:
  explicit PoolOverlapError(const std::string& word)
      : Error("pool word '" + word + "' collides with a keyword"),
        word_(word) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

// Requested bias-list size cannot be met.
class ListTooSmallError : public Error {
 public:
  ListTooSmallError(std::size_t required, std::size_t requested)
      : Error("bias list size " + std::to_string(requested) +
              " below required " + std::to_string(required)) {}
};

class NoDistractorEntriesError : public Error {
 public:
  NoDistractorEntriesError()
      : Error("context has no distractor-bearing entries") {}
};

class InputTooLongError : public Error {
 public:
  explicit InputTooLongError(std::size_t n)
      : Error("token list length " + std::to_string(n) +
              " exceeds the alignment limit") {}
};

// Reference/hypothesis manifests (or nbest/context streams) disagree on ids.
class IdMismatchError : public Error {
 public:
  explicit IdMismatchError(const std::vector<std::string>& missing)
      : Error(describe(missing)), missing_(missing) {}
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  static std::string describe(const std::vector<std::string>& ids) {
    std::string s = "id mismatch; missing:";
    for (const auto& id : ids) s += " " + id;
    return s;
  }
  std::vector<std::string> missing_;
};

}  // namespace ctxbias
