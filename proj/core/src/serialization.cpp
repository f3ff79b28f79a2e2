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

#include "anticart/serialization.hpp"

#include "anticart/error.hpp"
#include "json_io.hpp"

namespace anticart {

using nlohmann::json;

namespace {

json types_to_json(const TypeList& types) {
  json out = json::array();
  for (const auto& t : types) out.push_back(t.to_string());
  return out;
}

WireType wire_from_json(const json& v) {
  TypeList parsed = parse_types(v.get<std::string>());
  if (parsed.size() != 1) throw FormatError("expected a single wire type, got " + v.dump());
  return parsed.front();
}

TypeList types_from_json(const json& v) {
  if (!v.is_array()) throw FormatError("expected a list of wire types");
  TypeList out;
  for (const auto& x : v) out.push_back(wire_from_json(x));
  return out;
}

}  // namespace

std::string diagram_to_json(const Diagram& d, int indent) {
  json types = json::object();
  for (const auto& base : d.types().bases()) types[base] = true;
  json nodes = json::array();
  for (size_t i = 0; i < d.nodes().size(); ++i) {
    const Generator& g = d.nodes()[i];
    json node = {{"id", i},
                 {"kind", to_string(g.kind)},
                 {"dom", types_to_json(g.dom)},
                 {"cod", types_to_json(g.cod)}};
    if (g.kind == GeneratorKind::Box) {
      node["name"] = g.name;
      node["payload"] = g.payload ? json(*g.payload) : json(nullptr);
      if (g.conjugate) node["conjugate"] = true;
      if (g.mixed) node["mixed"] = true;
    }
    if (g.kind == GeneratorKind::Spider) node["arity"] = {g.dom.size(), g.cod.size()};
    nodes.push_back(std::move(node));
  }
  json edges = json::array();
  for (const Edge& e : d.edges()) {
    edges.push_back({e.from.node, e.from.index, e.to.node, e.to.index});
  }
  json out = {{"types", std::move(types)},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)},
              {"inputs", types_to_json(d.inputs())},
              {"outputs", types_to_json(d.outputs())}};
  return out.dump(indent);
}

Diagram diagram_from_json(const std::string& text) {
  try {
    json v = json::parse(text);
    TypeTable table;
    const json& types = v.at("types");
    if (types.is_object()) {
      for (const auto& [base, declared] : types.items()) {
        if (!declared.is_boolean() || declared.get<bool>()) table.declare(base);
      }
    } else {
      for (const auto& base : types) table.declare(base.get<std::string>());
    }
    std::vector<Generator> nodes;
    for (const auto& node : v.at("nodes")) {
      if (node.contains("id") && node.at("id").get<size_t>() != nodes.size()) {
        throw FormatError("node ids must be 0, 1, 2, ... in order");
      }
      Generator g;
      g.kind = generator_kind_from_string(node.at("kind").get<std::string>());
      g.dom = types_from_json(node.at("dom"));
      g.cod = types_from_json(node.at("cod"));
      if (g.kind == GeneratorKind::Box) {
        g.name = node.value("name", std::string());
        if (node.contains("payload") && !node.at("payload").is_null()) {
          g.payload = node.at("payload").get<std::string>();
        }
        g.conjugate = node.value("conjugate", false);
        g.mixed = node.value("mixed", false);
      }
      if (g.kind == GeneratorKind::Spider && node.contains("arity")) {
        auto arity = node.at("arity").get<std::vector<size_t>>();
        if (arity.size() != 2 || arity[0] != g.dom.size() || arity[1] != g.cod.size()) {
          throw FormatError("spider arity disagrees with its dom/cod");
        }
      }
      nodes.push_back(std::move(g));
    }
    std::vector<Edge> edges;
    for (const auto& e : v.at("edges")) {
      auto q = e.get<std::vector<int>>();
      if (q.size() != 4) throw FormatError("edge must be [from-node, from-port, to-node, to-port]");
      edges.push_back({{q[0], q[1]}, {q[2], q[3]}});
    }
    Diagram d = Diagram::from_raw(std::move(table), std::move(nodes), std::move(edges),
                                  types_from_json(v.at("inputs")), types_from_json(v.at("outputs")));
    return validate(d).empty() ? canonicalize(d) : d;
  } catch (const json::exception& e) {
    throw FormatError(std::string("diagram JSON: ") + e.what());
  }
}

}  // namespace anticart
