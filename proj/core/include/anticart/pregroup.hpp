// Copyright 2026 The Anticart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anticart/diagram.hpp"
#include "anticart/semantics.hpp"
#include "anticart/tensor.hpp"

namespace anticart {

enum class PayloadKind { Pure, Mixed, Structural };

/// One reading of a word.
///
/// Pure payloads are states shaped like the type's dimensions. Mixed
/// payloads are thick-wire states: each wire contributes an adjacent
/// (plain, conjugate) index pair. Structural entries are wired from cups
/// and spiders when the diagram is emitted:
///   "auxiliary"  nested cups, e.g. does : n.L s s.R n
///   "negation"   as auxiliary, with the negation box on the plain leg of
///                the innermost cup; `data` is that box
///   "relative"   subject relative pronoun b.L b x.R b, e.g. who
struct LexicalEntry {
  TypeList type;
  PayloadKind kind = PayloadKind::Pure;
  std::string structural;
  std::optional<Tensor> data;
  std::string payload_ref;
};

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::map<std::string, int> bases);

  /// Throws FormatError on a malformed document and UnknownBase /
  /// DimensionMismatch on entries inconsistent with the base table.
  static Lexicon from_json(const std::string& text);

  /// Validates the entry and assigns its payload reference ("word" for the
  /// first reading, "word#k" after that).
  void add(const std::string& word, LexicalEntry entry);

  bool contains(const std::string& word) const { return entries_.count(word) > 0; }
  /// Throws UnknownWord.
  const std::vector<LexicalEntry>& entries(const std::string& word) const;

  const std::map<std::string, int>& bases() const { return bases_; }
  TypeTable table() const;
  Model model(Doubling doubling = Doubling::Thin) const;

 private:
  std::map<std::string, int> bases_;
  std::map<std::string, std::vector<LexicalEntry>> entries_;
};

/// A reduction of a sentence's flat type string by non-crossing cancelation
/// links. Link (i, j) closes `flat[i]` against `flat[j]`.
struct ParseWitness {
  std::vector<std::string> words;
  std::vector<int> entry_choice;  // reading used for each word
  std::vector<int> word_start;    // word k owns flat[word_start[k], word_start[k+1])
  TypeList flat;
  std::vector<std::pair<int, int>> links;  // sorted
  std::vector<int> residual;               // uncancelled positions, ascending

  bool operator==(const ParseWitness&) const = default;
};

/// Greedy stack reduction of one reading combination that did not parse.
struct ResidualReport {
  std::vector<int> entry_choice;
  TypeList residual;
};

struct ParseResult {
  std::vector<ParseWitness> witnesses;
  std::vector<ResidualReport> failures;  // filled only when there is no witness
  bool truncated = false;                // reading combinations exceeded the bound
};

struct ParseOptions {
  size_t max_combinations = 64;
};

/// Every planar reduction of `words` to exactly `target`, over every
/// combination of readings (first word most significant), each combination's
/// witnesses in lexicographic link order. Throws UnknownWord.
ParseResult parse(const Lexicon& lexicon, const std::vector<std::string>& words,
                  const TypeList& target, const ParseOptions& options = {});

/// Link sets and residuals reducing `flat` to `target`, by dynamic
/// programming over "span reduces to empty".
std::vector<std::pair<std::vector<std::pair<int, int>>, std::vector<int>>> reductions(
    const TypeList& flat, const TypeList& target);

/// True when replaying the witness's links leaves exactly `target`.
bool replay_witness(const ParseWitness& witness, const TypeList& target);

/// The state for one reading: a payload box, or the structural wiring.
/// Throws PayloadMissing.
Diagram word_diagram(const Lexicon& lexicon, const std::string& word, int entry_index);

/// Word states side by side, then one cap per link; the open outputs are the
/// residual wires. Throws PayloadMissing.
Diagram grammar_diagram(const Lexicon& lexicon, const ParseWitness& witness);

/// Splits on whitespace.
std::vector<std::string> tokenize(const std::string& sentence);

}  // namespace anticart
