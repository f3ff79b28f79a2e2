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

#include "anticart/protocols.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "anticart/error.hpp"
#include "anticart/rewrite.hpp"
#include "anticart/semantics.hpp"
#include "test_support.hpp"

namespace anticart {
namespace {

using Vec = std::vector<Complex>;

Vec apply_box(const Tensor& t, const Vec& psi) {
  const int d = static_cast<int>(psi.size());
  Vec out(d, 0.0);
  for (int a = 0; a < d; ++a)
    for (int c = 0; c < d; ++c) out[c] += psi[a] * t.values()[a * d + c];
  return out;
}

// Three-qudit state vector: psi on qudit 1, |Phi> on qudits 2,3, then the
// (unnormalised) projection of 1,2 onto (P_b ⊗ I)|Phi>.
Vec post_selected(const Vec& psi, const Vec& pauli, int d) {
  Vec out(d, 0.0);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Complex bell_b = pauli[i * d + j] * s;  // <ij|(P_b ⊗ I)|Phi>
      for (int k = 0; k < d; ++k) {
        const Complex state = psi[i] * (j == k ? s : 0.0);
        out[k] += std::conj(bell_b) * state;
      }
    }
  return out;
}

TEST(Pauli, FormAnOrthogonalUnitaryBasis) {
  for (int d = 2; d <= 4; ++d) {
    for (int b1 = 0; b1 < d * d; ++b1)
      for (int b2 = 0; b2 < d * d; ++b2) {
        const auto p1 = generalized_pauli(d, b1 / d, b1 % d);
        const auto p2 = generalized_pauli(d, b2 / d, b2 % d);
        Complex hs = 0;
        for (int k = 0; k < d * d; ++k) hs += std::conj(p1[k]) * p2[k];
        EXPECT_NEAR(std::abs(hs - Complex(b1 == b2 ? d : 0)), 0.0, 1e-12);
      }
  }
}

TEST(Teleportation, DiagramMatchesStateVectorSimulation) {
  Rng rng(6);
  for (int d = 2; d <= 3; ++d) {
    const Model m = teleportation_model(d);
    for (int b = 0; b < d * d; ++b) {
      const Tensor raw = evaluate(teleportation_diagram({d, b, false, std::nullopt}), m);
      const auto pauli = generalized_pauli(d, b / d, b % d);
      for (int t = 0; t < 10; ++t) {
        const Vec psi = random_tensor({d}, rng).values();
        const Vec a = apply_box(raw, psi);
        const Vec o = post_selected(psi, pauli, d);
        for (int k = 0; k < d; ++k) EXPECT_NEAR(std::abs(a[k] - o[k]), 0.0, 1e-12);
      }
    }
  }
}

TEST(Teleportation, CorrectedBranchesReproduceInput) {
  for (int d : {2, 3}) {
    const auto reports = verify_teleportation(d, 25, 1e-9, {.seed = 42});
    ASSERT_EQ(reports.size(), static_cast<size_t>(d * d));
    double total = 0;
    for (const auto& r : reports) {
      EXPECT_GE(r.fidelity, 1 - 1e-9);
      EXPECT_NEAR(r.probability, 1.0 / (d * d), 1e-9);
      total += r.probability;
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(Teleportation, WrongCorrectionIsCaught) {
  TeleportOptions options;
  options.correction = {1, 0, 3, 2};  // swap Z-type corrections
  EXPECT_THROW(verify_teleportation(2, 5, 1e-9, options), VerificationFailure);
  const auto reports = teleportation_reports(2, 5, options);
  EXPECT_LT(reports[0].fidelity, 0.999);
}

TEST(Teleportation, SkeletonYanksAfterSimplification) {
  // With branch 0 every Pauli box is the identity; what remains is a snake
  // and two scalars.
  const Model m = teleportation_model(3);
  const Diagram d = simplify_identity_payloads(teleportation_diagram({3, 0, true, std::nullopt}), m);
  const NormalForm nf = normalize(d);
  ASSERT_EQ(nf.diagram.nodes().size(), 2u);
  for (const auto& g : nf.diagram.nodes()) EXPECT_EQ(g.name, "bell_norm");
  EXPECT_EQ(normalize(teleportation_skeleton(3)).diagram,
            Diagram::identity(teleportation_skeleton(3).types(), teleportation_skeleton(3).inputs()));
}

TEST(Teleportation, BadSpecs) {
  EXPECT_THROW(teleportation_diagram({1, 0, true, std::nullopt}), FormatError);
  EXPECT_THROW(teleportation_diagram({2, 4, true, std::nullopt}), FormatError);
  EXPECT_THROW(teleportation_reports(2, 0), FormatError);
}

TEST(Composition, CupsComposeStates) {
  for (int d = 2; d <= 3; ++d) {
    const auto demo = sophisticated_composition_demo(d, 5);
    EXPECT_TRUE(approx_equal(evaluate(demo.before, demo.model), evaluate(demo.after, demo.model), 1e-9));
    const auto product = sophisticated_composition_demo(d, 5, true);
    EXPECT_FALSE(
        approx_equal(evaluate(product.before, product.model), evaluate(product.after, product.model), 1e-3, true));
  }
}

}  // namespace
}  // namespace anticart
