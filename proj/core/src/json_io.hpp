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

// JSON helpers shared by the loaders. Private to the core library.

#include <json.hpp>

#include "anticart/error.hpp"
#include "anticart/tensor.hpp"

namespace anticart::detail {

inline Complex complex_from_json(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw FormatError("expected a number or [re, im] pair, got " + v.dump());
}

inline nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline std::vector<Complex> complex_list_from_json(const nlohmann::json& v) {
  if (!v.is_array()) throw FormatError("expected an array of numbers");
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(complex_from_json(x));
  return out;
}

inline nlohmann::json tensor_to_json_value(const Tensor& t) {
  nlohmann::json data = nlohmann::json::array();
  for (const auto& x : t.data()) data.push_back(complex_to_json(x));
  return {{"shape", t.shape()}, {"data", std::move(data)}, {"scalar", complex_to_json(t.scalar())}};
}

inline Tensor tensor_from_json_value(const nlohmann::json& v) {
  if (!v.is_object() || !v.contains("shape") || !v.contains("data")) {
    throw FormatError("tensor JSON needs \"shape\" and \"data\"");
  }
  auto shape = v.at("shape").get<std::vector<int>>();
  auto data = complex_list_from_json(v.at("data"));
  Complex scalar = v.contains("scalar") ? complex_from_json(v.at("scalar")) : Complex(1.0);
  return Tensor(std::move(shape), std::move(data), scalar);
}

}  // namespace anticart::detail
