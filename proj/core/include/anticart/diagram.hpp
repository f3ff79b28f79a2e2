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

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "anticart/wire_type.hpp"

namespace anticart {

enum class GeneratorKind { Box, Cup, Cap, Swap, Spider, Identity };

std::string_view to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(std::string_view name);

/// One node of a string diagram. Immutable once placed in a Diagram.
struct Generator {
  GeneratorKind kind = GeneratorKind::Box;
  std::string name;  // boxes only
  TypeList dom;
  TypeList cod;
  std::optional<std::string> payload;  // boxes only
  bool conjugate = false;  // box evaluates to the entrywise conjugate payload
  bool mixed = false;      // box payload is already a thick-wire (density) tensor

  static Generator box(std::string name, TypeList dom, TypeList cod,
                       std::optional<std::string> payload = std::nullopt);
  /// [] -> [b^(z+1), b^z]
  static Generator cup(const std::string& base, int order);
  /// [b^z, b^(z+1)] -> []
  static Generator cap(const std::string& base, int order);
  static Generator swap(const WireType& u, const WireType& v);
  static Generator spider(const std::string& base, int n_in, int m_out);
  static Generator identity(const WireType& t);

  /// Checks the per-kind shape invariants; empty when well formed.
  std::optional<std::string> shape_problem() const;

  auto operator<=>(const Generator&) const = default;
  bool operator==(const Generator&) const = default;
};

inline constexpr int kBoundary = -1;

/// A port on a node, or on the open boundary when `node == kBoundary`.
/// Sources are node outputs or diagram inputs; targets are node inputs or
/// diagram outputs.
struct Port {
  int node = kBoundary;
  int index = 0;

  auto operator<=>(const Port&) const = default;
  bool operator==(const Port&) const = default;
};

/// Directed connection from a source port to a target port.
struct Edge {
  Port from;
  Port to;

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;
};

enum class ViolationKind {
  TypeMismatch,
  PortReuse,
  DanglingPort,
  BadPort,
  Cycle,
  UnknownBase,
  BadGenerator,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// An acyclic port-graph with typed open ports.
///
/// Diagrams built through the public constructors are always valid and kept
/// in a canonical node order, so two diagrams are structurally equal exactly
/// when their members compare equal. Associativity of both compositions, the
/// unit laws and the interchange law therefore hold as plain equality.
class Diagram {
 public:
  /// The empty diagram: no wires, no nodes.
  Diagram() = default;

  /// Bare wires, no nodes.
  static Diagram identity(const TypeTable& table, const TypeList& types);

  /// Wraps parts without validating or canonicalizing them. Used by the
  /// JSON loader and by tests that need malformed input for `validate`.
  static Diagram from_raw(TypeTable table, std::vector<Generator> nodes, std::vector<Edge> edges,
                          TypeList inputs, TypeList outputs);

  const TypeTable& types() const { return table_; }
  const std::vector<Generator>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const TypeList& inputs() const { return inputs_; }
  const TypeList& outputs() const { return outputs_; }

  bool operator==(const Diagram&) const = default;

 private:
  friend class DiagramBuilder;

  TypeTable table_;
  std::vector<Generator> nodes_;
  std::vector<Edge> edges_;
  TypeList inputs_;
  TypeList outputs_;
};

/// Assembles a diagram node by node. `build()` validates and canonicalizes.
class DiagramBuilder {
 public:
  DiagramBuilder(TypeTable table, TypeList inputs, TypeList outputs);

  int add(Generator g);
  void connect(Port from, Port to);

  /// Throws InvalidDiagram listing every violation.
  Diagram build() const;

 private:
  Diagram draft_;
};

// Constructors. All throw UnknownBase for undeclared bases.

Diagram make_generator(const TypeTable& table, const std::string& name, const TypeList& dom,
                       const TypeList& cod, std::optional<std::string> payload = std::nullopt);

enum class Bend { Cup, Cap };
Diagram bend(const TypeTable& table, const std::string& base, int order, Bend direction);

/// Throws ZeroArity when n_in + m_out == 0.
Diagram spider(const TypeTable& table, const std::string& base, int n_in, int m_out);

Diagram swap(const TypeTable& table, const WireType& u, const WireType& v);

/// A single explicit Identity node on one wire.
Diagram identity_node(const TypeTable& table, const WireType& t);

/// Wire permutation made of adjacent swaps: output k carries input
/// `perm[k]`.
Diagram permutation(const TypeTable& table, const TypeList& types, const std::vector<int>& perm);

/// Sequential composition, `f` first. Throws TypeMismatch naming the first
/// offending port pair.
Diagram compose_seq(const Diagram& f, const Diagram& g);

/// Parallel composition, `f` on the left.
Diagram compose_par(const Diagram& f, const Diagram& g);

/// Empty when every invariant holds.
std::vector<Violation> validate(const Diagram& d);

/// The canonical form of a valid diagram. Exposed for loaders and rewriters
/// that assemble diagrams by hand.
Diagram canonicalize(const Diagram& d);

}  // namespace anticart
