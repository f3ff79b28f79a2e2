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

#include "anticart/pregroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "anticart/error.hpp"

namespace anticart {

namespace {

using LinkSet = std::vector<std::pair<int, int>>;
using Reduction = std::pair<LinkSet, std::vector<int>>;

// empty_[i][j]: flat[i, j) reduces to nothing through nested links.
class SpanTable {
 public:
  explicit SpanTable(const TypeList& flat)
      : flat_(flat), n_(static_cast<int>(flat.size())),
        empty_(static_cast<size_t>(n_) + 1, std::vector<char>(static_cast<size_t>(n_) + 1, 0)) {
    for (int i = 0; i <= n_; ++i) empty_[i][i] = 1;
    for (int len = 2; len <= n_; len += 2) {
      for (int i = 0; i + len <= n_; ++i) {
        const int j = i + len;
        for (int k = i + 1; k < j; k += 2) {
          if (closes(i, k) && empty_[i + 1][k] && empty_[k + 1][j]) {
            empty_[i][j] = 1;
            break;
          }
        }
      }
    }
  }

  bool empty(int i, int j) const { return empty_[i][j] != 0; }

  const std::vector<LinkSet>& links(int i, int j) {
    auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<LinkSet> out;
    if (i == j) {
      out.emplace_back();
    } else {
      for (int k = i + 1; k < j; k += 2) {
        if (!closes(i, k) || !empty(i + 1, k) || !empty(k + 1, j)) continue;
        const auto inner = links(i + 1, k);
        const auto rest = links(k + 1, j);
        for (const auto& a : inner) {
          for (const auto& b : rest) {
            LinkSet s;
            s.reserve(1 + a.size() + b.size());
            s.emplace_back(i, k);
            s.insert(s.end(), a.begin(), a.end());
            s.insert(s.end(), b.begin(), b.end());
            out.push_back(std::move(s));
          }
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  bool closes(int i, int k) const { return flat_[i].cancels_with(flat_[k]); }

  const TypeList& flat_;
  int n_;
  std::vector<std::vector<char>> empty_;
  std::map<std::pair<int, int>, std::vector<LinkSet>> memo_;
};

// Residual wires stand up through the diagram, so no link may span one: the
// gaps between consecutive residual positions must each reduce to empty.
void thread_target(SpanTable& spans, const TypeList& flat, const TypeList& target, int from,
                   size_t t, LinkSet& links, std::vector<int>& residual, std::vector<Reduction>& out) {
  const int n = static_cast<int>(flat.size());
  if (t == target.size()) {
    if (!spans.empty(from, n)) return;
    for (const auto& tail : spans.links(from, n)) {
      LinkSet all = links;
      all.insert(all.end(), tail.begin(), tail.end());
      out.emplace_back(std::move(all), residual);
    }
    return;
  }
  for (int r = from; r < n; ++r) {
    if (!spans.empty(from, r) || flat[r] != target[t]) continue;
    for (const auto& gap : spans.links(from, r)) {
      const size_t mark = links.size();
      links.insert(links.end(), gap.begin(), gap.end());
      residual.push_back(r);
      thread_target(spans, flat, target, r + 1, t + 1, links, residual, out);
      residual.pop_back();
      links.resize(mark);
    }
  }
}

TypeList greedy_residual(const TypeList& flat) {
  TypeList stack;
  for (const auto& w : flat) {
    if (!stack.empty() && stack.back().cancels_with(w)) {
      stack.pop_back();
    } else {
      stack.push_back(w);
    }
  }
  return stack;
}

}  // namespace

std::vector<Reduction> reductions(const TypeList& flat, const TypeList& target) {
  SpanTable spans(flat);
  std::vector<Reduction> out;
  LinkSet links;
  std::vector<int> residual;
  thread_target(spans, flat, target, 0, 0, links, residual, out);
  for (auto& r : out) std::sort(r.first.begin(), r.first.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> tokenize(const std::string& sentence) {
  std::istringstream in(sentence);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

ParseResult parse(const Lexicon& lexicon, const std::vector<std::string>& words,
                  const TypeList& target, const ParseOptions& options) {
  std::vector<const std::vector<LexicalEntry>*> readings;
  for (const auto& w : words) readings.push_back(&lexicon.entries(w));

  ParseResult result;
  std::vector<int> choice(words.size(), 0);
  // odometer over readings, last word fastest
  auto advance = [&] {
    for (size_t k = words.size(); k-- > 0;) {
      if (++choice[k] < static_cast<int>(readings[k]->size())) return true;
      choice[k] = 0;
    }
    return false;
  };
  size_t combinations = 0;
  do {
    if (combinations++ == options.max_combinations) {
      result.truncated = true;
      break;
    }
    TypeList flat;
    std::vector<int> starts;
    for (size_t k = 0; k < words.size(); ++k) {
      starts.push_back(static_cast<int>(flat.size()));
      const auto& type = (*readings[k])[choice[k]].type;
      flat.insert(flat.end(), type.begin(), type.end());
    }
    starts.push_back(static_cast<int>(flat.size()));
    auto found = reductions(flat, target);
    if (found.empty()) result.failures.push_back({choice, greedy_residual(flat)});
    for (auto& [links, residual] : found) {
      result.witnesses.push_back({words, choice, starts, flat, std::move(links), std::move(residual)});
    }
  } while (advance());
  if (!result.witnesses.empty()) result.failures.clear();
  return result;
}

bool replay_witness(const ParseWitness& witness, const TypeList& target) {
  const int n = static_cast<int>(witness.flat.size());
  std::vector<std::pair<int, int>> links = witness.links;
  // innermost first
  std::sort(links.begin(), links.end(), [](const auto& a, const auto& b) {
    return a.second - a.first < b.second - b.first;
  });
  std::vector<char> alive(static_cast<size_t>(n), 1);
  for (const auto& [i, j] : links) {
    if (i < 0 || j >= n || i >= j || !alive[i] || !alive[j]) return false;
    for (int k = i + 1; k < j; ++k) {
      if (alive[k]) return false;
    }
    if (!witness.flat[i].cancels_with(witness.flat[j])) return false;
    alive[i] = alive[j] = 0;
  }
  TypeList left;
  std::vector<int> positions;
  for (int k = 0; k < n; ++k) {
    if (alive[k]) {
      left.push_back(witness.flat[k]);
      positions.push_back(k);
    }
  }
  return left == target && positions == witness.residual;
}

namespace {

Diagram nested_cups(const TypeTable& table, const TypeList& type, bool negate,
                    const std::string& word, const std::string& ref) {
  const int n = static_cast<int>(type.size());
  DiagramBuilder b(table, {}, type);
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const int cup = b.add(Generator::cup(type[j].base, type[j].order));
    Port left{cup, 0};
    Port right{cup, 1};
    if (negate && i == n / 2 - 1) {
      // the plain leg of the innermost cup runs through the negation box
      const bool on_left = type[i].order == 0;
      const WireType& wire = on_left ? type[i] : type[j];
      const int box = b.add(Generator::box(word, {wire}, {wire}, ref));
      b.connect(on_left ? left : right, {box, 0});
      (on_left ? left : right) = {box, 0};
    }
    b.connect(left, {kBoundary, i});
    b.connect(right, {kBoundary, j});
  }
  return b.build();
}

Diagram relative_pronoun(const TypeTable& table, const TypeList& type) {
  const std::string& noun = type[1].base;
  const std::string& clause = type[2].base;
  DiagramBuilder b(table, {}, type);
  const int noun_cup = b.add(Generator::cup(noun, 0));          // [b.L, b]
  const int clause_cup = b.add(Generator::cup(clause, -1));     // [x, x.R]
  const int copy = b.add(Generator::spider(noun, 1, 2));
  const int discard = b.add(Generator::spider(clause, 1, 0));
  b.connect({noun_cup, 0}, {kBoundary, 0});
  b.connect({noun_cup, 1}, {copy, 0});
  b.connect({copy, 0}, {kBoundary, 1});
  b.connect({copy, 1}, {kBoundary, 3});
  b.connect({clause_cup, 0}, {discard, 0});
  b.connect({clause_cup, 1}, {kBoundary, 2});
  return b.build();
}

}  // namespace

Diagram word_diagram(const Lexicon& lexicon, const std::string& word, int entry_index) {
  const auto& entries = lexicon.entries(word);
  if (entry_index < 0 || entry_index >= static_cast<int>(entries.size())) {
    throw UnknownWord(word + " has no reading " + std::to_string(entry_index));
  }
  const LexicalEntry& e = entries[entry_index];
  const TypeTable table = lexicon.table();
  if (e.kind == PayloadKind::Structural) {
    if (e.structural == "relative") return relative_pronoun(table, e.type);
    return nested_cups(table, e.type, e.structural == "negation", word, e.payload_ref);
  }
  if (!e.data) throw PayloadMissing(word);
  Generator state = Generator::box(word, {}, e.type, e.payload_ref);
  state.mixed = e.kind == PayloadKind::Mixed;
  DiagramBuilder b(table, {}, e.type);
  const int id = b.add(std::move(state));
  for (int i = 0; i < static_cast<int>(e.type.size()); ++i) b.connect({id, i}, {kBoundary, i});
  return b.build();
}

Diagram grammar_diagram(const Lexicon& lexicon, const ParseWitness& witness) {
  const TypeTable table = lexicon.table();
  Diagram row;
  for (size_t k = 0; k < witness.words.size(); ++k) {
    row = compose_par(row, word_diagram(lexicon, witness.words[k], witness.entry_choice[k]));
  }
  if (row.outputs() != witness.flat) {
    throw TypeMismatch("witness type string does not match the chosen readings");
  }
  TypeList residual_types;
  for (int r : witness.residual) residual_types.push_back(witness.flat[r]);
  DiagramBuilder caps(table, witness.flat, residual_types);
  for (const auto& [i, j] : witness.links) {
    const int cap = caps.add(Generator::cap(witness.flat[i].base, witness.flat[i].order));
    caps.connect({kBoundary, i}, {cap, 0});
    caps.connect({kBoundary, j}, {cap, 1});
  }
  for (size_t k = 0; k < witness.residual.size(); ++k) {
    caps.connect({kBoundary, witness.residual[k]}, {kBoundary, static_cast<int>(k)});
  }
  return compose_seq(row, caps.build());
}

}  // namespace anticart
