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

#include "anticart/resource.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "anticart/error.hpp"
#include "json_io.hpp"

namespace anticart {

Multiset make_multiset(const std::vector<std::string>& atoms) {
  Multiset m;
  for (const auto& a : atoms) ++m[a];
  return m;
}

Multiset repeat(const std::string& atom, int count) {
  Multiset m;
  if (count > 0) m[atom] = count;
  return m;
}

Multiset add(const Multiset& a, const Multiset& b) {
  Multiset out = a;
  for (const auto& [atom, k] : b) out[atom] += k;
  return out;
}

std::string to_string(const Multiset& m) {
  std::string out = "{";
  for (const auto& [atom, k] : m) {
    for (int i = 0; i < k; ++i) {
      if (out.size() > 1) out += ",";
      out += atom;
    }
  }
  return out + "}";
}

void ResourcePresentation::check(const Multiset& m) const {
  for (const auto& [atom, k] : m) {
    if (!atoms_.count(atom)) throw UnknownBase("atom '" + atom + "' is not declared");
    if (k <= 0) throw FormatError("multiset counts must be positive");
  }
}

void ResourcePresentation::add_rule(ConversionRule rule) {
  check(rule.from);
  check(rule.to);
  rules_.push_back(std::move(rule));
}

ResourcePresentation ResourcePresentation::from_json(const std::string& text) {
  try {
    auto v = nlohmann::json::parse(text);
    auto atoms = v.at("atoms").get<std::vector<std::string>>();
    ResourcePresentation p(std::set<std::string>(atoms.begin(), atoms.end()));
    for (const auto& r : v.value("rules", nlohmann::json::array())) {
      p.add_rule({make_multiset(r.at("from").get<std::vector<std::string>>()),
                  make_multiset(r.at("to").get<std::vector<std::string>>())});
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("presentation JSON: ") + e.what());
  }
}

namespace {

using State = std::vector<int>;

struct StateHash {
  size_t operator()(const State& s) const {
    size_t h = 1469598103934665603ull;
    for (int x : s) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Atom-indexed counts plus per-rule deltas.
class Encoder {
 public:
  explicit Encoder(const ResourcePresentation& p) : atoms_(p.atoms().begin(), p.atoms().end()) {
    for (const auto& r : p.rules()) rules_.push_back({encode(r.from), encode(r.to)});
  }

  State encode(const Multiset& m) const {
    State s(atoms_.size(), 0);
    for (const auto& [atom, k] : m) {
      auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
      s[static_cast<size_t>(it - atoms_.begin())] += k;
    }
    return s;
  }

  Multiset decode(const State& s) const {
    Multiset m;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] > 0) m[atoms_[i]] = s[i];
    }
    return m;
  }

  bool applies(size_t rule, const State& s) const {
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < rules_[rule].first[i]) return false;
    }
    return true;
  }

  State fire(size_t rule, const State& s) const {
    State out = s;
    for (size_t i = 0; i < s.size(); ++i) out[i] += rules_[rule].second[i] - rules_[rule].first[i];
    return out;
  }

  State context(size_t rule, const State& s) const {
    State out = s;
    for (size_t i = 0; i < s.size(); ++i) out[i] -= rules_[rule].first[i];
    return out;
  }

  size_t rule_count() const { return rules_.size(); }

 private:
  std::vector<std::string> atoms_;
  std::vector<std::pair<State, State>> rules_;
};

struct Node {
  State state;
  int parent;
  int rule;
  size_t depth;
};

// Breadth-first exploration. `stop` is checked on every discovered node and
// ends the search early when it returns true; returns that node's index.
template <typename Stop>
std::optional<size_t> explore(const Encoder& enc, const State& start, const SearchLimits& limits,
                              std::vector<Node>& nodes, Stop stop) {
  std::unordered_map<State, size_t, StateHash> seen;
  nodes.push_back({start, -1, -1, 0});
  seen.emplace(start, 0);
  if (stop(nodes[0])) return 0;
  for (size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= limits.max_steps) continue;
    for (size_t r = 0; r < enc.rule_count(); ++r) {
      if (!enc.applies(r, nodes[head].state)) continue;
      State next = enc.fire(r, nodes[head].state);
      if (seen.count(next)) continue;
      if (nodes.size() >= limits.max_states) {
        throw StateExplosion("more than " + std::to_string(limits.max_states) + " states visited");
      }
      seen.emplace(next, nodes.size());
      nodes.push_back({std::move(next), static_cast<int>(head), static_cast<int>(r),
                       nodes[head].depth + 1});
      if (stop(nodes.back())) return nodes.size() - 1;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ConversionWitness> convertible(const Multiset& src, const Multiset& dst,
                                             const ResourcePresentation& p,
                                             const SearchLimits& limits) {
  p.check(src);
  p.check(dst);
  Encoder enc(p);
  const State goal = enc.encode(dst);
  std::vector<Node> nodes;
  auto hit = explore(enc, enc.encode(src), limits, nodes,
                     [&](const Node& n) { return n.state == goal; });
  if (!hit) return std::nullopt;
  ConversionWitness w{src, dst, {}};
  for (int at = static_cast<int>(*hit); nodes[at].parent >= 0; at = nodes[at].parent) {
    const Node& parent = nodes[nodes[at].parent];
    const auto rule = static_cast<size_t>(nodes[at].rule);
    w.steps.push_back({nodes[at].rule, enc.decode(enc.context(rule, parent.state))});
  }
  std::reverse(w.steps.begin(), w.steps.end());
  return w;
}

bool replay(const ConversionWitness& w, const ResourcePresentation& p) {
  Multiset state = w.source;
  for (const auto& step : w.steps) {
    if (step.rule < 0 || step.rule >= static_cast<int>(p.rules().size())) return false;
    const auto& rule = p.rules()[step.rule];
    if (add(step.context, rule.from) != state) return false;
    state = add(step.context, rule.to);
  }
  return state == w.target;
}

std::string ConversionRate::to_string() const {
  if (!found()) return "0/1 (no conversion within bounds)";
  return std::to_string(numerator) + "/" + std::to_string(denominator) + " at n=" +
         std::to_string(n) + ",m=" + std::to_string(m);
}

ConversionRate conversion_rate(const std::string& a, const std::string& b,
                               const ResourcePresentation& p, int n_max,
                               const SearchLimits& limits, int m_max) {
  if (n_max < 1) throw FormatError("n_max must be at least 1");
  p.check(repeat(a, 1));
  p.check(repeat(b, 1));
  Encoder enc(p);
  ConversionRate best;
  best.n_max = n_max;
  best.m_max = m_max;
  best.max_steps = limits.max_steps;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Node> nodes;
    explore(enc, enc.encode(repeat(a, n)), limits, nodes, [](const Node&) { return false; });
    std::set<State> reached;
    for (auto& node : nodes) reached.insert(std::move(node.state));
    for (int m = m_max; m >= 1; --m) {
      if (!reached.count(enc.encode(repeat(b, m)))) continue;
      // m/n beats best.m/best.n; ties keep the smaller n
      if (!best.found() || static_cast<long>(m) * best.n > static_cast<long>(best.m) * n) {
        best.n = n;
        best.m = m;
      }
      break;
    }
  }
  if (best.found()) {
    const long g = std::gcd(static_cast<long>(best.m), static_cast<long>(best.n));
    best.numerator = best.m / g;
    best.denominator = best.n / g;
  }
  return best;
}

}  // namespace anticart
