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

#include "anticart/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

#include "anticart/error.hpp"

namespace anticart {

namespace {

constexpr std::string_view kKindNames[] = {"box", "cup", "cap", "swap", "spider", "identity"};
constexpr std::string_view kViolationNames[] = {"TypeMismatch", "PortReuse", "DanglingPort",
                                                "BadPort",      "Cycle",     "UnknownBase",
                                                "BadGenerator"};

std::string port_name(const Port& p, bool source) {
  if (p.node == kBoundary) return (source ? "input " : "output ") + std::to_string(p.index);
  return "node " + std::to_string(p.node) + (source ? " out " : " in ") + std::to_string(p.index);
}

}  // namespace

std::string_view to_string(GeneratorKind kind) { return kKindNames[static_cast<int>(kind)]; }

GeneratorKind generator_kind_from_string(std::string_view name) {
  for (int i = 0; i < 6; ++i) {
    if (kKindNames[i] == name) return static_cast<GeneratorKind>(i);
  }
  throw FormatError("unknown generator kind '" + std::string(name) + "'");
}

std::string_view to_string(ViolationKind kind) { return kViolationNames[static_cast<int>(kind)]; }

Generator Generator::box(std::string name, TypeList dom, TypeList cod,
                         std::optional<std::string> payload) {
  Generator g;
  g.kind = GeneratorKind::Box;
  g.name = std::move(name);
  g.dom = std::move(dom);
  g.cod = std::move(cod);
  g.payload = std::move(payload);
  return g;
}

Generator Generator::cup(const std::string& base, int order) {
  Generator g;
  g.kind = GeneratorKind::Cup;
  g.cod = {{base, order + 1}, {base, order}};
  return g;
}

Generator Generator::cap(const std::string& base, int order) {
  Generator g;
  g.kind = GeneratorKind::Cap;
  g.dom = {{base, order}, {base, order + 1}};
  return g;
}

Generator Generator::swap(const WireType& u, const WireType& v) {
  Generator g;
  g.kind = GeneratorKind::Swap;
  g.dom = {u, v};
  g.cod = {v, u};
  return g;
}

Generator Generator::spider(const std::string& base, int n_in, int m_out) {
  Generator g;
  g.kind = GeneratorKind::Spider;
  g.dom.assign(static_cast<size_t>(n_in), WireType{base, 0});
  g.cod.assign(static_cast<size_t>(m_out), WireType{base, 0});
  return g;
}

Generator Generator::identity(const WireType& t) {
  Generator g;
  g.kind = GeneratorKind::Identity;
  g.dom = {t};
  g.cod = {t};
  return g;
}

std::optional<std::string> Generator::shape_problem() const {
  if (kind != GeneratorKind::Box && (!name.empty() || payload || conjugate || mixed)) {
    return "only boxes carry a name or payload";
  }
  switch (kind) {
    case GeneratorKind::Box:
      if (name.empty()) return "box without a name";
      return std::nullopt;
    case GeneratorKind::Cup:
      if (!dom.empty() || cod.size() != 2 || cod[0].base != cod[1].base ||
          cod[0].order != cod[1].order + 1) {
        return "cup must be [] -> [b^(z+1), b^z]";
      }
      return std::nullopt;
    case GeneratorKind::Cap:
      if (!cod.empty() || dom.size() != 2 || !dom[0].cancels_with(dom[1])) {
        return "cap must be [b^z, b^(z+1)] -> []";
      }
      return std::nullopt;
    case GeneratorKind::Swap:
      if (dom.size() != 2 || cod.size() != 2 || cod[0] != dom[1] || cod[1] != dom[0]) {
        return "swap must be [u, v] -> [v, u]";
      }
      return std::nullopt;
    case GeneratorKind::Spider: {
      if (dom.empty() && cod.empty()) return "spider with no legs";
      const std::string& base = dom.empty() ? cod[0].base : dom[0].base;
      auto plain = [&](const WireType& w) { return w.base == base && w.order == 0; };
      if (!std::all_of(dom.begin(), dom.end(), plain) || !std::all_of(cod.begin(), cod.end(), plain)) {
        return "spider legs must share one base at order 0";
      }
      return std::nullopt;
    }
    case GeneratorKind::Identity:
      if (dom.size() != 1 || cod != dom) return "identity must be [t] -> [t]";
      return std::nullopt;
  }
  return "unknown kind";
}

Diagram Diagram::identity(const TypeTable& table, const TypeList& types) {
  table.check(types);
  DiagramBuilder b(table, types, types);
  for (int i = 0; i < static_cast<int>(types.size()); ++i) b.connect({kBoundary, i}, {kBoundary, i});
  return b.build();
}

Diagram Diagram::from_raw(TypeTable table, std::vector<Generator> nodes, std::vector<Edge> edges,
                          TypeList inputs, TypeList outputs) {
  Diagram d;
  d.table_ = std::move(table);
  d.nodes_ = std::move(nodes);
  d.edges_ = std::move(edges);
  d.inputs_ = std::move(inputs);
  d.outputs_ = std::move(outputs);
  return d;
}

DiagramBuilder::DiagramBuilder(TypeTable table, TypeList inputs, TypeList outputs)
    : draft_(Diagram::from_raw(std::move(table), {}, {}, std::move(inputs), std::move(outputs))) {}

int DiagramBuilder::add(Generator g) {
  draft_.nodes_.push_back(std::move(g));
  return static_cast<int>(draft_.nodes_.size()) - 1;
}

void DiagramBuilder::connect(Port from, Port to) { draft_.edges_.push_back({from, to}); }

Diagram DiagramBuilder::build() const {
  auto violations = validate(draft_);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) {
      if (!msg.empty()) msg += "; ";
      msg += std::string(to_string(v.kind)) + " (" + v.detail + ")";
    }
    throw InvalidDiagram(msg);
  }
  return canonicalize(draft_);
}

std::vector<Violation> validate(const Diagram& d) {
  std::vector<Violation> out;
  const auto& nodes = d.nodes();
  const int n_nodes = static_cast<int>(nodes.size());

  auto check_types = [&](const TypeList& types, const std::string& where) {
    for (const auto& t : types) {
      if (t.base.empty() || !d.types().contains(t.base)) {
        out.push_back({ViolationKind::UnknownBase, where + ": '" + t.base + "'"});
      }
    }
  };
  check_types(d.inputs(), "inputs");
  check_types(d.outputs(), "outputs");
  for (int i = 0; i < n_nodes; ++i) {
    check_types(nodes[i].dom, "node " + std::to_string(i));
    check_types(nodes[i].cod, "node " + std::to_string(i));
    if (auto problem = nodes[i].shape_problem()) {
      out.push_back({ViolationKind::BadGenerator, "node " + std::to_string(i) + ": " + *problem});
    }
  }

  auto source_type = [&](const Port& p) -> const WireType* {
    if (p.node == kBoundary) {
      return p.index >= 0 && p.index < static_cast<int>(d.inputs().size()) ? &d.inputs()[p.index]
                                                                          : nullptr;
    }
    if (p.node < 0 || p.node >= n_nodes) return nullptr;
    const auto& cod = nodes[p.node].cod;
    return p.index >= 0 && p.index < static_cast<int>(cod.size()) ? &cod[p.index] : nullptr;
  };
  auto target_type = [&](const Port& p) -> const WireType* {
    if (p.node == kBoundary) {
      return p.index >= 0 && p.index < static_cast<int>(d.outputs().size()) ? &d.outputs()[p.index]
                                                                           : nullptr;
    }
    if (p.node < 0 || p.node >= n_nodes) return nullptr;
    const auto& dom = nodes[p.node].dom;
    return p.index >= 0 && p.index < static_cast<int>(dom.size()) ? &dom[p.index] : nullptr;
  };

  std::map<Port, int> source_uses;
  std::map<Port, int> target_uses;
  std::vector<std::vector<int>> succ(static_cast<size_t>(n_nodes));
  std::vector<int> indegree(static_cast<size_t>(n_nodes), 0);
  for (size_t k = 0; k < d.edges().size(); ++k) {
    const Edge& e = d.edges()[k];
    const WireType* from = source_type(e.from);
    const WireType* to = target_type(e.to);
    std::string label = "edge " + std::to_string(k) + " " + port_name(e.from, true) + " -> " +
                        port_name(e.to, false);
    if (!from || !to) {
      out.push_back({ViolationKind::BadPort, label});
      continue;
    }
    if (*from != *to) {
      out.push_back({ViolationKind::TypeMismatch,
                     label + ": " + from->to_string() + " vs " + to->to_string()});
    }
    if (++source_uses[e.from] == 2) out.push_back({ViolationKind::PortReuse, port_name(e.from, true)});
    if (++target_uses[e.to] == 2) out.push_back({ViolationKind::PortReuse, port_name(e.to, false)});
    if (e.from.node != kBoundary && e.to.node != kBoundary) {
      succ[e.from.node].push_back(e.to.node);
      ++indegree[e.to.node];
    }
  }

  auto require = [&](const Port& p, bool source) {
    const auto& uses = source ? source_uses : target_uses;
    if (!uses.count(p)) out.push_back({ViolationKind::DanglingPort, port_name(p, source)});
  };
  for (int i = 0; i < static_cast<int>(d.inputs().size()); ++i) require({kBoundary, i}, true);
  for (int i = 0; i < static_cast<int>(d.outputs().size()); ++i) require({kBoundary, i}, false);
  for (int n = 0; n < n_nodes; ++n) {
    for (int i = 0; i < static_cast<int>(nodes[n].dom.size()); ++i) require({n, i}, false);
    for (int i = 0; i < static_cast<int>(nodes[n].cod.size()); ++i) require({n, i}, true);
  }

  std::vector<int> ready;
  for (int n = 0; n < n_nodes; ++n) {
    if (indegree[n] == 0) ready.push_back(n);
  }
  int seen = 0;
  while (!ready.empty()) {
    int n = ready.back();
    ready.pop_back();
    ++seen;
    for (int m : succ[n]) {
      if (--indegree[m] == 0) ready.push_back(m);
    }
  }
  if (seen != n_nodes) {
    out.push_back({ViolationKind::Cycle, std::to_string(n_nodes - seen) + " nodes on cycles"});
  }
  return out;
}

namespace {

// Neighbourhood of every port of a valid diagram.
struct PortMap {
  std::vector<std::vector<Port>> in_src;   // node input  -> source port
  std::vector<std::vector<Port>> out_dst;  // node output -> target port
  std::vector<Port> input_dst;             // diagram input  -> target
  std::vector<Port> output_src;            // diagram output -> source

  explicit PortMap(const Diagram& d) {
    const auto& nodes = d.nodes();
    in_src.resize(nodes.size());
    out_dst.resize(nodes.size());
    for (size_t n = 0; n < nodes.size(); ++n) {
      in_src[n].resize(nodes[n].dom.size());
      out_dst[n].resize(nodes[n].cod.size());
    }
    input_dst.resize(d.inputs().size());
    output_src.resize(d.outputs().size());
    for (const Edge& e : d.edges()) {
      if (e.from.node == kBoundary) {
        input_dst[e.from.index] = e.to;
      } else {
        out_dst[e.from.node][e.from.index] = e.to;
      }
      if (e.to.node == kBoundary) {
        output_src[e.to.index] = e.from;
      } else {
        in_src[e.to.node][e.to.index] = e.from;
      }
    }
  }
};

// Breadth-first labelling: each newly reached node gets the next label and
// its ports are scanned inputs first, then outputs, in port order.
void bfs_label(const PortMap& ports, std::vector<int>& label, int& next, std::queue<int>& queue) {
  auto visit = [&](const Port& p) {
    if (p.node != kBoundary && label[p.node] < 0) {
      label[p.node] = next++;
      queue.push(p.node);
    }
  };
  while (!queue.empty()) {
    int n = queue.front();
    queue.pop();
    for (const Port& p : ports.in_src[n]) visit(p);
    for (const Port& p : ports.out_dst[n]) visit(p);
  }
}

using Serialization = std::pair<std::vector<Generator>, std::vector<std::tuple<int, int, int, int>>>;

// Structure of one floating component as seen from `start`.
Serialization serialize_from(const Diagram& d, const PortMap& ports, int start,
                             std::vector<int>& scratch) {
  std::fill(scratch.begin(), scratch.end(), -1);
  int next = 0;
  std::queue<int> queue;
  scratch[start] = next++;
  queue.push(start);
  bfs_label(ports, scratch, next, queue);
  Serialization s;
  s.first.resize(static_cast<size_t>(next));
  for (size_t n = 0; n < scratch.size(); ++n) {
    if (scratch[n] < 0) continue;
    s.first[scratch[n]] = d.nodes()[n];
    for (size_t j = 0; j < ports.out_dst[n].size(); ++j) {
      const Port& t = ports.out_dst[n][j];
      s.second.emplace_back(scratch[n], static_cast<int>(j), scratch[t.node], t.index);
    }
  }
  std::sort(s.second.begin(), s.second.end());
  return s;
}

}  // namespace

Diagram canonicalize(const Diagram& d) {
  const auto& nodes = d.nodes();
  const int n_nodes = static_cast<int>(nodes.size());
  PortMap ports(d);

  std::vector<int> rank(static_cast<size_t>(n_nodes), -1);
  int next = 0;
  std::queue<int> queue;
  auto anchor = [&](const Port& p) {
    if (p.node != kBoundary && rank[p.node] < 0) {
      rank[p.node] = next++;
      queue.push(p.node);
      bfs_label(ports, rank, next, queue);
    }
  };
  for (const Port& p : ports.input_dst) anchor(p);
  for (const Port& p : ports.output_src) anchor(p);

  // Components not reachable from the boundary: pick, per component, the
  // lexicographically smallest serialization over all start nodes.
  if (next < n_nodes) {
    std::vector<int> component(static_cast<size_t>(n_nodes), -1);
    std::vector<std::vector<int>> members;
    for (int n = 0; n < n_nodes; ++n) {
      if (rank[n] >= 0 || component[n] >= 0) continue;
      std::vector<int> comp_rank(static_cast<size_t>(n_nodes), -1);
      int local = 0;
      std::queue<int> q;
      comp_rank[n] = local++;
      q.push(n);
      bfs_label(ports, comp_rank, local, q);
      members.emplace_back();
      for (int m = 0; m < n_nodes; ++m) {
        if (comp_rank[m] >= 0) {
          component[m] = static_cast<int>(members.size()) - 1;
          members.back().push_back(m);
        }
      }
    }
    std::vector<int> scratch(static_cast<size_t>(n_nodes));
    std::vector<std::pair<Serialization, int>> best;  // (serialization, start node)
    for (const auto& comp : members) {
      std::optional<std::pair<Serialization, int>> winner;
      for (int start : comp) {
        auto s = serialize_from(d, ports, start, scratch);
        if (!winner || s < winner->first) winner.emplace(std::move(s), start);
      }
      best.push_back(std::move(*winner));
    }
    std::vector<size_t> order(best.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return best[a].first < best[b].first; });
    for (size_t idx : order) {
      int start = best[idx].second;
      rank[start] = next++;
      queue.push(start);
      bfs_label(ports, rank, next, queue);
    }
  }

  // Topological order; ties broken by generator (kind, name, ports, ...)
  // and then by the structural rank.
  std::vector<int> indegree(static_cast<size_t>(n_nodes), 0);
  for (const Edge& e : d.edges()) {
    if (e.from.node != kBoundary && e.to.node != kBoundary) ++indegree[e.to.node];
  }
  auto later = [&](int a, int b) {
    if (nodes[a] != nodes[b]) return nodes[b] < nodes[a];
    return rank[b] < rank[a];
  };
  std::priority_queue<int, std::vector<int>, decltype(later)> ready(later);
  for (int n = 0; n < n_nodes; ++n) {
    if (indegree[n] == 0) ready.push(n);
  }
  std::vector<int> new_id(static_cast<size_t>(n_nodes), -1);
  std::vector<Generator> new_nodes;
  new_nodes.reserve(nodes.size());
  while (!ready.empty()) {
    int n = ready.top();
    ready.pop();
    new_id[n] = static_cast<int>(new_nodes.size());
    new_nodes.push_back(nodes[n]);
    for (const Port& t : ports.out_dst[n]) {
      if (t.node != kBoundary && --indegree[t.node] == 0) ready.push(t.node);
    }
  }

  auto remap = [&](Port p) {
    if (p.node != kBoundary) p.node = new_id[p.node];
    return p;
  };
  std::vector<Edge> new_edges;
  new_edges.reserve(d.edges().size());
  for (const Edge& e : d.edges()) new_edges.push_back({remap(e.from), remap(e.to)});
  std::sort(new_edges.begin(), new_edges.end());
  return Diagram::from_raw(d.types(), std::move(new_nodes), std::move(new_edges), d.inputs(),
                           d.outputs());
}

namespace {

Diagram single(const TypeTable& table, Generator g) {
  table.check(g.dom);
  table.check(g.cod);
  DiagramBuilder b(table, g.dom, g.cod);
  const int n_in = static_cast<int>(g.dom.size());
  const int n_out = static_cast<int>(g.cod.size());
  int id = b.add(std::move(g));
  for (int i = 0; i < n_in; ++i) b.connect({kBoundary, i}, {id, i});
  for (int i = 0; i < n_out; ++i) b.connect({id, i}, {kBoundary, i});
  return b.build();
}

TypeTable merge(const TypeTable& a, const TypeTable& b) {
  if (a == b) return a;
  TypeTable out = a;
  for (const auto& base : b.bases()) out.declare(base);
  return out;
}

}  // namespace

Diagram make_generator(const TypeTable& table, const std::string& name, const TypeList& dom,
                       const TypeList& cod, std::optional<std::string> payload) {
  if (name.empty()) throw FormatError("box name must be nonempty");
  return single(table, Generator::box(name, dom, cod, std::move(payload)));
}

Diagram bend(const TypeTable& table, const std::string& base, int order, Bend direction) {
  table.check(base);
  return single(table, direction == Bend::Cup ? Generator::cup(base, order)
                                              : Generator::cap(base, order));
}

Diagram spider(const TypeTable& table, const std::string& base, int n_in, int m_out) {
  table.check(base);
  if (n_in < 0 || m_out < 0 || n_in + m_out == 0) {
    throw ZeroArity("spider on '" + base + "' needs at least one leg");
  }
  return single(table, Generator::spider(base, n_in, m_out));
}

Diagram swap(const TypeTable& table, const WireType& u, const WireType& v) {
  return single(table, Generator::swap(u, v));
}

Diagram identity_node(const TypeTable& table, const WireType& t) {
  return single(table, Generator::identity(t));
}

Diagram permutation(const TypeTable& table, const TypeList& types, const std::vector<int>& perm) {
  const size_t n = types.size();
  std::vector<int> sorted(perm);
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < n; ++i) {
    if (perm.size() != n || sorted[i] != static_cast<int>(i)) {
      throw FormatError("not a permutation of " + std::to_string(n) + " wires");
    }
  }
  // Bubble sort the current arrangement into `perm`, one adjacent swap at a time.
  std::vector<int> current(n);
  std::iota(current.begin(), current.end(), 0);
  std::vector<int> target_pos(n);
  for (size_t k = 0; k < n; ++k) target_pos[perm[k]] = static_cast<int>(k);
  Diagram out = Diagram::identity(table, types);
  TypeList layer = types;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < n; ++i) {
      if (target_pos[current[i]] <= target_pos[current[i + 1]]) continue;
      TypeList left(layer.begin(), layer.begin() + static_cast<long>(i));
      TypeList right(layer.begin() + static_cast<long>(i) + 2, layer.end());
      Diagram step = compose_par(compose_par(Diagram::identity(table, left),
                                             swap(table, layer[i], layer[i + 1])),
                                 Diagram::identity(table, right));
      out = compose_seq(out, step);
      std::swap(layer[i], layer[i + 1]);
      std::swap(current[i], current[i + 1]);
      moved = true;
    }
  }
  return out;
}

Diagram compose_seq(const Diagram& f, const Diagram& g) {
  const auto& mid_f = f.outputs();
  const auto& mid_g = g.inputs();
  for (size_t i = 0; i < std::max(mid_f.size(), mid_g.size()); ++i) {
    if (i >= mid_f.size() || i >= mid_g.size() || mid_f[i] != mid_g[i]) {
      std::string lhs = i < mid_f.size() ? mid_f[i].to_string() : "<none>";
      std::string rhs = i < mid_g.size() ? mid_g[i].to_string() : "<none>";
      throw TypeMismatch("port " + std::to_string(i) + ": " + lhs + " vs " + rhs);
    }
  }
  const int offset = static_cast<int>(f.nodes().size());
  DiagramBuilder b(merge(f.types(), g.types()), f.inputs(), g.outputs());
  for (const auto& n : f.nodes()) b.add(n);
  for (const auto& n : g.nodes()) b.add(n);

  std::vector<Port> into_mid(mid_f.size());   // source feeding f's output i
  std::vector<Port> out_of_mid(mid_g.size()); // target fed by g's input i
  for (const Edge& e : f.edges()) {
    if (e.to.node == kBoundary) {
      into_mid[e.to.index] = e.from;
    } else {
      b.connect(e.from, e.to);
    }
  }
  for (const Edge& e : g.edges()) {
    Port to = e.to;
    if (to.node != kBoundary) to.node += offset;
    if (e.from.node == kBoundary) {
      out_of_mid[e.from.index] = to;
    } else {
      b.connect({e.from.node + offset, e.from.index}, to);
    }
  }
  for (size_t i = 0; i < mid_f.size(); ++i) b.connect(into_mid[i], out_of_mid[i]);
  return b.build();
}

Diagram compose_par(const Diagram& f, const Diagram& g) {
  const int offset = static_cast<int>(f.nodes().size());
  const int in_offset = static_cast<int>(f.inputs().size());
  const int out_offset = static_cast<int>(f.outputs().size());
  DiagramBuilder b(merge(f.types(), g.types()), concat(f.inputs(), g.inputs()),
                   concat(f.outputs(), g.outputs()));
  for (const auto& n : f.nodes()) b.add(n);
  for (const auto& n : g.nodes()) b.add(n);
  for (const Edge& e : f.edges()) b.connect(e.from, e.to);
  for (const Edge& e : g.edges()) {
    Port from = e.from;
    Port to = e.to;
    from.node == kBoundary ? from.index += in_offset : from.node += offset;
    to.node == kBoundary ? to.index += out_offset : to.node += offset;
    b.connect(from, to);
  }
  return b.build();
}

}  // namespace anticart
