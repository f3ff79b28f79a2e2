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

#include <optional>
#include <set>

#include "anticart/error.hpp"
#include "anticart/random.hpp"
#include "anticart/semantics.hpp"

namespace anticart {

namespace {

struct Ports {
  std::vector<std::vector<Port>> in_src;
  std::vector<std::vector<Port>> out_dst;

  explicit Ports(const Diagram& d) : in_src(d.nodes().size()), out_dst(d.nodes().size()) {
    for (size_t n = 0; n < d.nodes().size(); ++n) {
      in_src[n].resize(d.nodes()[n].dom.size());
      out_dst[n].resize(d.nodes()[n].cod.size());
    }
    for (const Edge& e : d.edges()) {
      if (e.from.node != kBoundary) out_dst[e.from.node][e.from.index] = e.to;
      if (e.to.node != kBoundary) in_src[e.to.node][e.to.index] = e.from;
    }
  }
};

struct Redex {
  std::string rule;
  std::vector<int> removed;
  std::vector<Edge> bridges;
};

bool reaches(const Ports& ports, int from, int to) {
  std::vector<bool> seen(ports.out_dst.size(), false);
  std::vector<int> stack{from};
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    if (n == to) return true;
    if (seen[n]) continue;
    seen[n] = true;
    for (const Port& p : ports.out_dst[n]) {
      if (p.node != kBoundary) stack.push_back(p.node);
    }
  }
  return false;
}

std::optional<Redex> snake_at(const Diagram& d, const Ports& ports, int cup) {
  const Generator& c = d.nodes()[cup];
  for (int leg = 0; leg < 2; ++leg) {
    const Port t = ports.out_dst[cup][leg];
    if (t.node == kBoundary || d.nodes()[t.node].kind != GeneratorKind::Cap) continue;
    const int cap = t.node;
    const int other_leg = 1 - leg;
    const int other_in = 1 - t.index;
    const Port x = ports.in_src[cap][other_in];
    const Port y = ports.out_dst[cup][other_leg];
    if (x.node == cup) continue;  // closed loop, not a snake
    if (c.cod[other_leg] != d.nodes()[cap].dom[other_in]) continue;
    // The straightened wire x -> y must not close a feedback loop.
    if (x.node != kBoundary && y.node != kBoundary && reaches(ports, y.node, x.node)) continue;
    return Redex{"snake", {cup, cap}, {{x, y}}};
  }
  return std::nullopt;
}

std::optional<Redex> swap_pair_at(const Diagram& d, const Ports& ports, int first) {
  const Port t0 = ports.out_dst[first][0];
  const Port t1 = ports.out_dst[first][1];
  if (t0.node == kBoundary || t0.node != t1.node) return std::nullopt;
  if (d.nodes()[t0.node].kind != GeneratorKind::Swap) return std::nullopt;
  if (t0.index != 0 || t1.index != 1) return std::nullopt;
  const int second = t0.node;
  return Redex{"swap-involution",
               {first, second},
               {{ports.in_src[first][0], ports.out_dst[second][0]},
                {ports.in_src[first][1], ports.out_dst[second][1]}}};
}

std::optional<Redex> find_redex(const Diagram& d) {
  Ports ports(d);
  for (int n = 0; n < static_cast<int>(d.nodes().size()); ++n) {
    switch (d.nodes()[n].kind) {
      case GeneratorKind::Identity:
        return Redex{"identity", {n}, {{ports.in_src[n][0], ports.out_dst[n][0]}}};
      case GeneratorKind::Cup:
        if (auto r = snake_at(d, ports, n)) return r;
        break;
      case GeneratorKind::Swap:
        if (auto r = swap_pair_at(d, ports, n)) return r;
        break;
      default:
        break;
    }
  }
  return std::nullopt;
}

Diagram apply(const Diagram& d, const Redex& r) {
  std::set<int> removed(r.removed.begin(), r.removed.end());
  std::vector<int> new_id(d.nodes().size(), -1);
  DiagramBuilder b(d.types(), d.inputs(), d.outputs());
  for (int n = 0; n < static_cast<int>(d.nodes().size()); ++n) {
    if (!removed.count(n)) new_id[n] = b.add(d.nodes()[n]);
  }
  auto remap = [&](Port p) {
    if (p.node != kBoundary) p.node = new_id[p.node];
    return p;
  };
  for (const Edge& e : d.edges()) {
    if (removed.count(e.from.node) || removed.count(e.to.node)) continue;
    b.connect(remap(e.from), remap(e.to));
  }
  for (const Edge& e : r.bridges) b.connect(remap(e.from), remap(e.to));
  return b.build();
}

}  // namespace

NormalForm normalize(const Diagram& d) {
  auto violations = validate(d);
  if (!violations.empty()) {
    throw InvalidDiagram(std::string(to_string(violations.front().kind)) + " (" +
                         violations.front().detail + ")");
  }
  NormalForm out{canonicalize(d), {}};
  while (auto redex = find_redex(out.diagram)) {
    out.trace.push_back({redex->rule, redex->removed});
    out.diagram = apply(out.diagram, *redex);
  }
  return out;
}

bool same_structure(const Diagram& a, const Diagram& b) {
  return a.nodes() == b.nodes() && a.edges() == b.edges() && a.inputs() == b.inputs() &&
         a.outputs() == b.outputs();
}

namespace {

void collect_payload_shapes(const Diagram& d, const Model& model,
                            std::map<std::string, std::vector<int>>& shapes) {
  for (const auto& g : d.nodes()) {
    if (g.kind != GeneratorKind::Box || !g.payload) continue;
    auto shape = model.dims_of(concat(g.dom, g.cod));
    auto [it, inserted] = shapes.emplace(*g.payload, shape);
    if (!inserted && it->second != shape) {
      throw DimensionMismatch("payload '" + *g.payload + "' used with two different shapes");
    }
  }
}

}  // namespace

bool equal(const Diagram& d1, const Diagram& d2, const EqualityMode& mode) {
  if (d1.inputs() != d2.inputs() || d1.outputs() != d2.outputs()) {
    throw ShapeMismatch("open ports differ: " + to_string(d1.inputs()) + " -> " +
                        to_string(d1.outputs()) + " vs " + to_string(d2.inputs()) + " -> " +
                        to_string(d2.outputs()));
  }
  if (std::holds_alternative<Syntactic>(mode)) {
    return same_structure(normalize(d1).diagram, normalize(d2).diagram);
  }
  const auto& sem = std::get<Semantic>(mode);
  Model model;
  model.dims = sem.dims;
  std::map<std::string, std::vector<int>> shapes;
  collect_payload_shapes(d1, model, shapes);
  collect_payload_shapes(d2, model, shapes);
  Rng rng(sem.seed);
  for (const auto& [ref, shape] : shapes) model.payloads.emplace(ref, random_tensor(shape, rng));
  return approx_equal(evaluate(d1, model), evaluate(d2, model), sem.tolerance, sem.up_to_scalar);
}

}  // namespace anticart
