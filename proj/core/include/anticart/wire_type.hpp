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
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace anticart {

/// An atomic base symbol together with an adjoint order.
///
/// Order 0 is the plain type. `left()` adds one (written `x.L`, the anti-type
/// that wants an `x` on its left) and `right()` subtracts one (`x.R`). A cap
/// cancels the adjacent pair `(b^z, b^(z+1))`.
struct WireType {
  std::string base;
  int order = 0;

  WireType left() const { return {base, order + 1}; }
  WireType right() const { return {base, order - 1}; }

  /// True when `*this` followed by `next` can be closed off by a cap.
  bool cancels_with(const WireType& next) const {
    return base == next.base && next.order == order + 1;
  }

  std::string to_string() const;

  auto operator<=>(const WireType&) const = default;
  bool operator==(const WireType&) const = default;
};

/// Ordered wires; the empty list is the monoidal unit.
using TypeList = std::vector<WireType>;

TypeList concat(const TypeList& a, const TypeList& b);
std::string to_string(const TypeList& types);

/// Parses the textual type syntax: whitespace separated tokens, each a base
/// or a parenthesized group followed by any number of `.L` / `.R` suffixes.
/// Suffixes on a group reverse the group. Throws FormatError.
TypeList parse_types(std::string_view text);

/// The set of declared bases. Constructors reject undeclared ones.
class TypeTable {
 public:
  TypeTable() = default;
  TypeTable(std::initializer_list<std::string> bases) : bases_(bases) {}
  explicit TypeTable(std::set<std::string> bases) : bases_(std::move(bases)) {}

  void declare(const std::string& base) { bases_.insert(base); }
  bool contains(const std::string& base) const { return bases_.count(base) > 0; }
  const std::set<std::string>& bases() const { return bases_; }

  /// Throws UnknownBase for the first undeclared wire.
  void check(const TypeList& types) const;
  void check(const std::string& base) const;

  bool operator==(const TypeTable&) const = default;

 private:
  std::set<std::string> bases_;
};

}  // namespace anticart
