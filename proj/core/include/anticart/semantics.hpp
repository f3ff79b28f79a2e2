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
#include <string>

#include "anticart/diagram.hpp"
#include "anticart/tensor.hpp"

namespace anticart {

enum class Doubling { Thin, Thick };

/// Assigns a dimension to every base and a tensor to every payload
/// reference. All adjoint orders of a base share its dimension.
struct Model {
  std::map<std::string, int> dims;
  std::map<std::string, Tensor> payloads;
  Doubling doubling = Doubling::Thin;

  /// Throws DimensionMismatch when `base` has no dimension.
  int dim(const std::string& base) const;
  std::vector<int> dims_of(const TypeList& types) const;
};

/// Contracts `d` into a tensor indexed by its open ports, inputs first, then
/// outputs. A box payload is indexed by its dom followed by its cod. Cups
/// and caps are identity matrices, swaps permute, spiders are generalized
/// Kronecker deltas and rank-0 payloads are folded into the scalar.
///
/// With a thick model the doubled diagram is evaluated instead.
///
/// Contraction order is greedy by smallest intermediate tensor with a
/// deterministic tie-break. Throws MissingPayload, DimensionMismatch.
Tensor evaluate(const Diagram& d, const Model& model);

/// CPM doubling: every wire becomes an adjacent (plain, conjugate) pair of
/// the same type; every pure node gets a conjugate twin on the second copy;
/// boxes flagged `mixed` stay single with doubled dom and cod.
Diagram double_diagram(const Diagram& d);

/// Rearranges a doubled tensor with interleaved (plain, conjugate) index
/// pairs into a square matrix: rows are the plain indices, columns the
/// conjugate ones. A rank-2 square tensor is returned folded but unchanged.
/// Throws NotSquare.
Tensor density_matrix(const Tensor& t);

/// Von Neumann entropy in bits of `t` read as a square matrix (first half of
/// the row-major data index is the row), after normalizing to unit trace.
/// Eigenvalues below 1e-12 count as zero. Throws NotSquare, NotHermitian.
double entropy(const Tensor& t);

enum class SimilarityKind { Cosine, NormalizedOverlap };

/// Cosine: |<t1, t2>| / (|t1| |t2|). NormalizedOverlap: Tr(r1 r2) /
/// (Tr r1 Tr r2) for square (thick) tensors. Throws ShapeMismatch, ZeroNorm.
double similarity(const Tensor& t1, const Tensor& t2, SimilarityKind kind);

/// Operator-space rank of a two-wire state, reshaped [d1, d2]. Used for the
/// anti-cartesian witness: a product state has rank 1.
int operator_rank(const Tensor& state, double tolerance = 1e-9);

}  // namespace anticart
