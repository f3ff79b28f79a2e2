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

#include "anticart/rewrite.hpp"

#include <gtest/gtest.h>

#include "anticart/error.hpp"
#include "anticart/semantics.hpp"
#include "test_support.hpp"

namespace anticart {
namespace {

using testing::random_diagram;
using testing::random_model;
using testing::random_types;

const TypeTable kTable{"n", "s"};

Diagram layer(const TypeList& pre, const Diagram& g, const TypeList& post) {
  return compose_par(compose_par(Diagram::identity(kTable, pre), g), Diagram::identity(kTable, post));
}

// (id ⊗ cup) ; (cap ⊗ id) on w, or its mirror image.
Diagram snake(const WireType& w, bool right) {
  if (right) {
    return compose_seq(layer({w}, bend(kTable, w.base, w.order, Bend::Cup), {}),
                       layer({}, bend(kTable, w.base, w.order, Bend::Cap), {w}));
  }
  return compose_seq(layer({}, bend(kTable, w.base, w.order - 1, Bend::Cup), {w}),
                     layer({w}, bend(kTable, w.base, w.order - 1, Bend::Cap), {}));
}

TEST(Normalize, BothSnakesYank) {
  for (int order = -2; order <= 2; ++order) {
    const WireType w{"n", order};
    for (bool right : {true, false}) {
      const NormalForm nf = normalize(snake(w, right));
      EXPECT_EQ(nf.diagram, Diagram::identity(kTable, {w}));
      ASSERT_EQ(nf.trace.size(), 1u);
      EXPECT_EQ(nf.trace[0].rule, "snake");
    }
  }
}

TEST(Normalize, SwapInvolutionAndIdentity) {
  const WireType n{"n", 0}, s{"s", 1};
  const Diagram twice = compose_seq(swap(kTable, n, s), swap(kTable, s, n));
  EXPECT_EQ(normalize(twice).diagram, Diagram::identity(kTable, {n, s}));
  EXPECT_EQ(normalize(identity_node(kTable, n)).diagram, Diagram::identity(kTable, {n}));
  // A single swap is already normal.
  EXPECT_EQ(normalize(swap(kTable, n, s)).diagram, swap(kTable, n, s));
}

TEST(Normalize, ClosedLoopIsKept) {
  // A circle: cup, crossed, then capped. Evaluates to the dimension.
  const Diagram loop = compose_seq(compose_seq(bend(kTable, "n", 0, Bend::Cup), swap(kTable, {"n", 1}, {"n", 0})),
                                   bend(kTable, "n", 0, Bend::Cap));
  const NormalForm nf = normalize(loop);
  EXPECT_EQ(nf.diagram, loop);
  Model m;
  m.dims = {{"n", 4}};
  EXPECT_NEAR(std::abs(evaluate(nf.diagram, m).values()[0] - Complex(4)), 0.0, 1e-12);
}

TEST(Normalize, FeedbackIsNotYanked) {
  // cup.out0 -> f -> cap.in1, cup.out1 -> cap.in0: the trace of f.
  DiagramBuilder b(kTable, {}, {});
  const int cup = b.add(Generator::cup("n", 0));
  const int f = b.add(Generator::box("f", parse_types("n.L"), parse_types("n.L"), "f"));
  const int cap = b.add(Generator::cap("n", 0));
  b.connect({cup, 0}, {f, 0});
  b.connect({cup, 1}, {cap, 0});
  b.connect({f, 0}, {cap, 1});
  const Diagram d = b.build();
  const NormalForm nf = normalize(d);
  EXPECT_EQ(nf.diagram, d);
  EXPECT_TRUE(validate(nf.diagram).empty());

  Model m;
  m.dims = {{"n", 3}};
  m.payloads.emplace("f", Tensor({3, 3}, {1, 2, 3, 4, 5, 6, 7, 8, 9}));
  EXPECT_NEAR(std::abs(evaluate(d, m).values()[0] - Complex(15)), 0.0, 1e-12);
}

TEST(Normalize, IsIdempotentAndSound) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    testing::RandomDiagramOptions options;
    options.max_nodes = 10;
    const Diagram d = random_diagram(kTable, random_types(kTable, trial % 3, 1, rng), rng, options);
    const NormalForm nf = normalize(d);
    EXPECT_TRUE(validate(nf.diagram).empty());
    EXPECT_EQ(normalize(nf.diagram).diagram, nf.diagram);
    EXPECT_TRUE(normalize(nf.diagram).trace.empty());
    EXPECT_LE(nf.diagram.nodes().size() + nf.trace.size(), d.nodes().size());
    const Model m = random_model(d, {{"n", 2}, {"s", 3}}, rng);
    EXPECT_LT(relative_error(evaluate(d, m), evaluate(nf.diagram, m)), 1e-9);
  }
}

TEST(Equal, ModesAndShapes) {
  const WireType n{"n", 0};
  const Diagram s = snake(n, true);
  const Diagram id = Diagram::identity(kTable, {n});
  EXPECT_TRUE(equal(s, id));
  EXPECT_TRUE(equal(s, id, Semantic{{{"n", 3}}, 7}));
  const Diagram f = make_generator(kTable, "f", {n}, {n}, "f");
  const Diagram g = make_generator(kTable, "g", {n}, {n}, "g");
  EXPECT_FALSE(equal(f, g));
  EXPECT_FALSE(equal(f, g, Semantic{{{"n", 2}}, 7}));
  EXPECT_TRUE(equal(f, compose_seq(f, s), Semantic{{{"n", 2}}, 7}));
  EXPECT_THROW(equal(f, Diagram::identity(kTable, {n, n})), ShapeMismatch);
}

TEST(Equal, SameStructureIgnoresTable) {
  const Diagram a = Diagram::identity(TypeTable{"n"}, parse_types("n"));
  const Diagram b = Diagram::identity(TypeTable{"n", "s"}, parse_types("n"));
  EXPECT_NE(a, b);
  EXPECT_TRUE(same_structure(a, b));
}

}  // namespace
}  // namespace anticart
