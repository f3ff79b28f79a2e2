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
#include <optional>
#include <utility>
#include <vector>

#include "anticart/diagram.hpp"
#include "anticart/semantics.hpp"

namespace anticart {

/// Post-selected teleportation of one qudit. Branch b = p * dim + q selects
/// the Bell effect built from the generalized Pauli X^p Z^q.
struct TeleportationSpec {
  int dim = 2;
  int branch = 0;
  bool corrected = true;
  /// Branch whose correction is applied; defaults to `branch`.
  std::optional<int> correction_branch;

  /// Throws FormatError when dim < 2 or a branch is out of range.
  void check() const;
};

/// X^p Z^q on `dim` levels (X shifts |j> to |j+1>, Z multiplies |j> by
/// w^j), row-major in column convention.
std::vector<Complex> generalized_pauli(int dim, int p, int q);

/// Input wire next to a cup; the Bell effect for the branch (the inverse
/// Pauli on the input, then a cap) closes the first two wires; the
/// correction Pauli sits on the output when requested. Bell state and
/// effect each carry a 1/sqrt(dim) scalar box.
Diagram teleportation_diagram(const TeleportationSpec& spec);

/// The bare zig-zag of the protocol: (id (x) cup) ; (cap (x) id).
Diagram teleportation_skeleton(int dim);

/// Dimensions and every payload used by `teleportation_diagram` for `dim`.
Model teleportation_model(int dim);

/// Replaces boxes whose payload is the identity matrix (within `tolerance`)
/// by Identity generators, so `normalize` can remove them.
Diagram simplify_identity_payloads(const Diagram& d, const Model& model, double tolerance = 1e-12);

struct BranchReport {
  int branch = 0;
  double fidelity = 0.0;     // worst over trials
  double probability = 0.0;  // mean over trials
  double max_probability_deviation = 0.0;  // from 1/dim^2
};

struct TeleportOptions {
  std::uint64_t seed = 0;
  /// correction[b] is the branch whose correction is applied on branch b;
  /// empty means the matching one.
  std::vector<int> correction;
};

/// Runs every branch on `trials` seeded random inputs.
std::vector<BranchReport> teleportation_reports(int dim, int trials, const TeleportOptions& options = {});

/// As above, then throws VerificationFailure naming the first branch whose
/// fidelity or probability misses by more than `tolerance`, or when the
/// probabilities do not sum to one.
std::vector<BranchReport> verify_teleportation(int dim, int trials, double tolerance,
                                               const TeleportOptions& options = {});

/// Three states wired through two cups into a cap-and-unitary top part,
/// together with its form after yanking: rho (x) rho' through the two-wire
/// unitary, next to rho''.
struct CompositionDemo {
  Diagram before;
  Diagram after;
  Model model;  // seeded states and unitary
};

/// With `product_instead_of_cup` the second cup is replaced by a product of
/// two single-wire states and the two forms no longer agree.
CompositionDemo sophisticated_composition_demo(int dim, std::uint64_t seed = 0,
                                               bool product_instead_of_cup = false);

}  // namespace anticart
