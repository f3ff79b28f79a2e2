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

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace anticart {

/// Atom -> positive count. The empty multiset is "nothing".
using Multiset = std::map<std::string, int>;

Multiset make_multiset(const std::vector<std::string>& atoms);
Multiset repeat(const std::string& atom, int count);
Multiset add(const Multiset& a, const Multiset& b);
std::string to_string(const Multiset& m);

/// `from` may be converted into `to` wherever `from` is present.
struct ConversionRule {
  Multiset from;
  Multiset to;
};

class ResourcePresentation {
 public:
  ResourcePresentation() = default;
  explicit ResourcePresentation(std::set<std::string> atoms) : atoms_(std::move(atoms)) {}

  /// {"atoms": [...], "rules": [{"from": [...], "to": [...]}]}. Throws
  /// FormatError, UnknownBase for undeclared atoms.
  static ResourcePresentation from_json(const std::string& text);

  /// Throws UnknownBase for undeclared atoms.
  void add_rule(ConversionRule rule);
  void check(const Multiset& m) const;

  const std::set<std::string>& atoms() const { return atoms_; }
  const std::vector<ConversionRule>& rules() const { return rules_; }

 private:
  std::set<std::string> atoms_;
  std::vector<ConversionRule> rules_;
};

struct ConversionStep {
  int rule = 0;
  Multiset context;  // the untouched part of the state when the rule fired
};

struct ConversionWitness {
  Multiset source;
  Multiset target;
  std::vector<ConversionStep> steps;
};

struct SearchLimits {
  size_t max_steps = 16;
  size_t max_states = 1'000'000;
};

/// Shortest conversion found by breadth-first search, or nothing within
/// `limits.max_steps`. Throws StateExplosion once more than
/// `limits.max_states` states have been visited.
std::optional<ConversionWitness> convertible(const Multiset& src, const Multiset& dst,
                                             const ResourcePresentation& p,
                                             const SearchLimits& limits = {});

/// True when every step applies and the last state is the target.
bool replay(const ConversionWitness& w, const ResourcePresentation& p);

/// Verified lower bound on r(a -> b) = sup { m/n : n.a <= m.b }, found by
/// searching n = 1..n_max and m = 1..m_max.
struct ConversionRate {
  long numerator = 0;  // reduced m/n
  long denominator = 1;
  int n = 0;  // attaining pair, 0 when nothing converts
  int m = 0;
  int n_max = 0;
  int m_max = 0;
  size_t max_steps = 0;

  bool found() const { return n > 0; }
  /// "2/1 at n=1,m=2", or "0/1 (no conversion within bounds)".
  std::string to_string() const;
};

/// Throws StateExplosion.
ConversionRate conversion_rate(const std::string& a, const std::string& b,
                               const ResourcePresentation& p, int n_max,
                               const SearchLimits& limits = {}, int m_max = 16);

}  // namespace anticart
