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

#include <benchmark/benchmark.h>

#include "anticart/pregroup.hpp"
#include "anticart/protocols.hpp"
#include "anticart/random.hpp"
#include "anticart/resource.hpp"
#include "anticart/rewrite.hpp"
#include "anticart/semantics.hpp"

namespace {

using namespace anticart;

const TypeTable kTable{"n"};

// A chain of `length` boxes on one wire, each followed by a right snake.
Diagram snaky_chain(int length) {
  const WireType w{"n", 0};
  Diagram d = Diagram::identity(kTable, {w});
  for (int k = 0; k < length; ++k) {
    const std::string name = "f" + std::to_string(k);
    d = compose_seq(d, make_generator(kTable, name, {w}, {w}, name));
    d = compose_seq(d, compose_par(Diagram::identity(kTable, {w}), bend(kTable, "n", 0, Bend::Cup)));
    d = compose_seq(d, compose_par(bend(kTable, "n", 0, Bend::Cap), Diagram::identity(kTable, {w})));
  }
  return d;
}

Model chain_model(int length, int dim) {
  Rng rng(1);
  Model m;
  m.dims = {{"n", dim}};
  for (int k = 0; k < length; ++k) m.payloads.emplace("f" + std::to_string(k), random_tensor({dim, dim}, rng));
  return m;
}

void BM_Normalize(benchmark::State& state) {
  const Diagram d = snaky_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Normalize)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_Evaluate(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  const Diagram d = snaky_chain(length);
  const Model m = chain_model(length, 8);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(d, m));
}
BENCHMARK(BM_Evaluate)->RangeMultiplier(2)->Range(4, 64);

void BM_Parse(benchmark::State& state) {
  // "a b a b ... c" with a = n n.R, b = n n.L: many nested reductions.
  Lexicon lex({{"n", 2}});
  lex.add("a", {parse_types("n n.R"), PayloadKind::Pure, "", {}, ""});
  lex.add("b", {parse_types("n n.L"), PayloadKind::Pure, "", {}, ""});
  lex.add("c", {parse_types("n"), PayloadKind::Pure, "", {}, ""});
  std::vector<std::string> words;
  for (int k = 0; k < state.range(0); ++k) words.push_back(k % 2 ? "b" : "a");
  words.push_back("c");
  const TypeList target = parse_types("n");
  for (auto _ : state) benchmark::DoNotOptimize(parse(lex, words, target));
}
BENCHMARK(BM_Parse)->DenseRange(2, 12, 2);

void BM_Teleport(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(teleportation_reports(dim, 25));
}
BENCHMARK(BM_Teleport)->DenseRange(2, 4);

void BM_Rate(benchmark::State& state) {
  ResourcePresentation p({"A", "B"});
  p.add_rule({make_multiset({"A"}), make_multiset({"B", "B"})});
  for (auto _ : state) benchmark::DoNotOptimize(conversion_rate("A", "B", p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Rate)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
