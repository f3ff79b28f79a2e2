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

#include <cmath>
#include <numeric>

#include "anticart/error.hpp"
#include "anticart/pregroup.hpp"
#include "json_io.hpp"

namespace anticart {

using nlohmann::json;

namespace {

std::vector<int> doubled_shape(const std::vector<int>& dims) {
  std::vector<int> out;
  for (int d : dims) {
    out.push_back(d);
    out.push_back(d);
  }
  return out;
}

// Sum_k w_k v_k v_k^dagger over unit-normalized senses, with each wire's
// (plain, conjugate) indices adjacent.
Tensor mixture(const std::vector<int>& dims, const std::vector<std::vector<Complex>>& senses,
               std::vector<double> weights) {
  size_t n = 1;
  for (int d : dims) n *= static_cast<size_t>(d);
  if (weights.empty()) weights.assign(senses.size(), 1.0);
  if (weights.size() != senses.size()) throw FormatError("one weight per sense is required");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw FormatError("sense weights must have a positive sum");

  std::vector<Complex> rho(n * n, Complex(0.0));
  for (size_t k = 0; k < senses.size(); ++k) {
    const auto& v = senses[k];
    if (v.size() != n) throw DimensionMismatch("sense vector has the wrong length");
    double norm2 = 0.0;
    for (const auto& x : v) norm2 += std::norm(x);
    if (norm2 == 0.0) throw ZeroNorm("sense vector is zero");
    const double w = weights[k] / total / norm2;
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        // interleave the digits of a (plain) and b (conjugate)
        size_t offset = 0;
        size_t ra = a, rb = b, place = 1;
        for (size_t wire = dims.size(); wire-- > 0;) {
          const size_t d = static_cast<size_t>(dims[wire]);
          offset += place * (rb % d);
          place *= d;
          offset += place * (ra % d);
          place *= d;
          ra /= d;
          rb /= d;
        }
        rho[offset] += w * v[a] * std::conj(v[b]);
      }
    }
  }
  return Tensor(doubled_shape(dims), std::move(rho));
}

}  // namespace

Lexicon::Lexicon(std::map<std::string, int> bases) : bases_(std::move(bases)) {
  for (const auto& [base, dim] : bases_) {
    if (base.empty()) throw FormatError("empty base name");
    if (dim <= 0) throw DimensionMismatch("base '" + base + "' needs a positive dimension");
  }
}

TypeTable Lexicon::table() const {
  TypeTable t;
  for (const auto& [base, dim] : bases_) t.declare(base);
  return t;
}

Model Lexicon::model(Doubling doubling) const {
  Model m;
  m.dims = bases_;
  m.doubling = doubling;
  for (const auto& [word, list] : entries_) {
    for (const auto& e : list) {
      if (e.data) m.payloads.emplace(e.payload_ref, *e.data);
    }
  }
  return m;
}

const std::vector<LexicalEntry>& Lexicon::entries(const std::string& word) const {
  auto it = entries_.find(word);
  if (it == entries_.end()) throw UnknownWord(word);
  return it->second;
}

void Lexicon::add(const std::string& word, LexicalEntry entry) {
  if (word.empty()) throw FormatError("empty word");
  if (entry.type.empty()) throw FormatError("word '" + word + "' has an empty type");
  table().check(entry.type);
  Model dims_only;
  dims_only.dims = bases_;
  const auto dims = dims_only.dims_of(entry.type);
  const auto& type = entry.type;

  switch (entry.kind) {
    case PayloadKind::Pure:
      if (entry.data && entry.data->shape() != dims) {
        throw DimensionMismatch("payload of '" + word + "' does not match its type");
      }
      break;
    case PayloadKind::Mixed:
      if (entry.data && entry.data->shape() != doubled_shape(dims)) {
        throw DimensionMismatch("mixed payload of '" + word + "' needs a doubled shape");
      }
      break;
    case PayloadKind::Structural: {
      const std::string& s = entry.structural;
      if (s == "auxiliary" || s == "negation") {
        const size_t n = type.size();
        if (n % 2 != 0) throw FormatError("'" + word + "': nested cups need an even type");
        for (size_t i = 0; i < n / 2; ++i) {
          const WireType& outer = type[i];
          const WireType& inner = type[n - 1 - i];
          if (outer.base != inner.base || outer.order != inner.order + 1) {
            throw FormatError("'" + word + "': wires " + std::to_string(i) + " and " +
                              std::to_string(n - 1 - i) + " cannot be joined by a cup");
          }
        }
        if (s == "negation") {
          const WireType& a = type[n / 2 - 1];
          const WireType& b = type[n / 2];
          if (a.order != 0 && b.order != 0) {
            throw FormatError("'" + word + "': innermost cup has no plain leg for negation");
          }
          const int d = bases_.at(a.base);
          if (!entry.data) throw PayloadMissing(word + " (negation matrix)");
          if (entry.data->shape() != std::vector<int>{d, d}) {
            throw DimensionMismatch("negation matrix of '" + word + "' must be " +
                                    std::to_string(d) + "x" + std::to_string(d));
          }
        }
      } else if (s == "relative") {
        if (type.size() != 4 || type[0] != WireType{type[1].base, 1} || type[1].order != 0 ||
            type[3] != type[1] || type[2].order != -1) {
          throw FormatError("'" + word + "': relative pronoun type must be b.L b x.R b");
        }
      } else {
        throw FormatError("'" + word + "': unknown structural builder '" + s + "'");
      }
      break;
    }
  }
  auto& list = entries_[word];
  entry.payload_ref = list.empty() ? word : word + "#" + std::to_string(list.size());
  list.push_back(std::move(entry));
}

Lexicon Lexicon::from_json(const std::string& text) {
  try {
    json v = json::parse(text);
    Lexicon lex(v.at("bases").get<std::map<std::string, int>>());
    Model dims_only;
    dims_only.dims = lex.bases_;
    for (const auto& w : v.at("words")) {
      const std::string word = w.at("word").get<std::string>();
      LexicalEntry entry;
      entry.type = parse_types(w.at("type").get<std::string>());
      const std::string payload = w.value("payload", std::string("dense"));
      std::vector<int> dims;
      lex.table().check(entry.type);
      dims = dims_only.dims_of(entry.type);
      if (payload == "dense" || payload == "pure") {
        entry.kind = PayloadKind::Pure;
        if (w.contains("data")) entry.data = Tensor(dims, detail::complex_list_from_json(w.at("data")));
      } else if (payload == "mixed") {
        entry.kind = PayloadKind::Mixed;
        if (w.contains("senses")) {
          std::vector<std::vector<Complex>> senses;
          for (const auto& s : w.at("senses")) senses.push_back(detail::complex_list_from_json(s));
          auto weights = w.value("weights", std::vector<double>{});
          entry.data = mixture(dims, senses, std::move(weights));
        } else if (w.contains("data")) {
          entry.data = Tensor(doubled_shape(dims), detail::complex_list_from_json(w.at("data")));
        }
      } else if (payload.rfind("structural:", 0) == 0) {
        entry.kind = PayloadKind::Structural;
        entry.structural = payload.substr(std::string("structural:").size());
        if (w.contains("data")) {
          auto matrix = detail::complex_list_from_json(w.at("data"));
          const auto side = static_cast<int>(std::llround(std::sqrt(static_cast<double>(matrix.size()))));
          entry.data = Tensor::from_matrix(side, matrix);
        }
      } else {
        throw FormatError("word '" + word + "': unknown payload kind '" + payload + "'");
      }
      lex.add(word, std::move(entry));
    }
    return lex;
  } catch (const json::exception& e) {
    throw FormatError(std::string("lexicon JSON: ") + e.what());
  }
}

}  // namespace anticart
