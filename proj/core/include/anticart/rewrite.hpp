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

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "anticart/diagram.hpp"

namespace anticart {

struct RewriteStep {
  std::string rule;        // "identity", "snake" or "swap-involution"
  std::vector<int> nodes;  // node ids in the diagram the rule was applied to
};

/// A diagram with no Identity node, no cup/cap snake and no cancelling swap
/// pair, in canonical node order.
struct NormalForm {
  Diagram diagram;
  std::vector<RewriteStep> trace;
};

/// Applies identity elimination, yanking (both chiralities) and swap
/// involution until none applies. Each step removes nodes, so this
/// terminates; the redex with the lowest canonical node id fires first.
/// Throws InvalidDiagram.
NormalForm normalize(const Diagram& d);

/// Same nodes, edges and open ports; the type tables may differ.
bool same_structure(const Diagram& a, const Diagram& b);

struct Syntactic {};

/// Random payloads drawn from `seed` for every payload reference, shared
/// between both sides.
struct Semantic {
  std::map<std::string, int> dims;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  bool up_to_scalar = false;
};

using EqualityMode = std::variant<Syntactic, Semantic>;

/// Throws ShapeMismatch when the open ports differ.
bool equal(const Diagram& d1, const Diagram& d2, const EqualityMode& mode = Syntactic{});

}  // namespace anticart
