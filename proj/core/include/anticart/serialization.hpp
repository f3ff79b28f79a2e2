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

#include <string>

#include "anticart/diagram.hpp"

namespace anticart {

/// {"types": {base: true}, "nodes": [...], "edges": [[from-node, from-port,
/// to-node, to-port], ...], "inputs": [...], "outputs": [...]}; node -1 in
/// an edge is the open boundary. Wire types are written in the textual type
/// syntax ("n.L").
std::string diagram_to_json(const Diagram& d, int indent = -1);

/// Loads a diagram. A well-formed result is canonicalized; a malformed one
/// is returned raw so `validate` can report on it. Throws FormatError on
/// JSON that does not describe a port-graph at all.
Diagram diagram_from_json(const std::string& text);

}  // namespace anticart
