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

#include "anticart/semantics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "anticart/error.hpp"

namespace anticart {

int Model::dim(const std::string& base) const {
  auto it = dims.find(base);
  if (it == dims.end()) throw DimensionMismatch("base '" + base + "' has no dimension");
  if (it->second <= 0) throw DimensionMismatch("base '" + base + "' has a non-positive dimension");
  return it->second;
}

std::vector<int> Model::dims_of(const TypeList& types) const {
  std::vector<int> out;
  out.reserve(types.size());
  for (const auto& t : types) out.push_back(dim(t.base));
  return out;
}

namespace {

// A tensor whose axes are named by wire labels.
struct Labeled {
  std::vector<int> labels;
  std::vector<int> dims;
  std::vector<Complex> data;

  size_t volume() const {
    size_t n = 1;
    for (int d : dims) n *= static_cast<size_t>(d);
    return n;
  }
};

// Reorders axes so that new axis k is old axis `order[k]`.
Labeled permute(const Labeled& t, const std::vector<int>& order) {
  const size_t rank = order.size();
  bool trivial = true;
  for (size_t k = 0; k < rank; ++k) trivial = trivial && order[k] == static_cast<int>(k);
  if (trivial) return t;

  std::vector<size_t> old_stride(rank, 1);
  for (size_t k = rank; k-- > 1;) old_stride[k - 1] = old_stride[k] * static_cast<size_t>(t.dims[k]);
  Labeled out;
  out.labels.resize(rank);
  out.dims.resize(rank);
  std::vector<size_t> stride(rank);
  for (size_t k = 0; k < rank; ++k) {
    out.labels[k] = t.labels[order[k]];
    out.dims[k] = t.dims[order[k]];
    stride[k] = old_stride[order[k]];
  }
  out.data.resize(t.data.size());
  std::vector<int> idx(rank, 0);
  size_t offset = 0;
  for (size_t i = 0; i < out.data.size(); ++i) {
    out.data[i] = t.data[offset];
    for (size_t k = rank; k-- > 0;) {
      if (++idx[k] < out.dims[k]) {
        offset += stride[k];
        break;
      }
      offset -= stride[k] * static_cast<size_t>(idx[k] - 1);
      idx[k] = 0;
    }
  }
  return out;
}

std::vector<int> shared_labels(const Labeled& a, const Labeled& b) {
  std::vector<int> out;
  for (int l : a.labels) {
    if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) out.push_back(l);
  }
  return out;
}

size_t result_volume(const Labeled& a, const Labeled& b) {
  size_t n = 1;
  for (size_t k = 0; k < a.labels.size(); ++k) {
    if (std::find(b.labels.begin(), b.labels.end(), a.labels[k]) == b.labels.end()) n *= a.dims[k];
  }
  for (size_t k = 0; k < b.labels.size(); ++k) {
    if (std::find(a.labels.begin(), a.labels.end(), b.labels[k]) == a.labels.end()) n *= b.dims[k];
  }
  return n;
}

// Sums over the labels shared by `a` and `b`; result axes are a's free axes
// followed by b's free axes.
Labeled contract(const Labeled& a, const Labeled& b) {
  auto shared = shared_labels(a, b);
  auto axis_of = [](const Labeled& t, int label) {
    return static_cast<int>(std::find(t.labels.begin(), t.labels.end(), label) - t.labels.begin());
  };
  std::vector<int> order_a, order_b;
  for (size_t k = 0; k < a.labels.size(); ++k) {
    if (std::find(shared.begin(), shared.end(), a.labels[k]) == shared.end()) {
      order_a.push_back(static_cast<int>(k));
    }
  }
  const size_t free_a = order_a.size();
  for (int l : shared) {
    order_a.push_back(axis_of(a, l));
    order_b.push_back(axis_of(b, l));
  }
  for (size_t k = 0; k < b.labels.size(); ++k) {
    if (std::find(shared.begin(), shared.end(), b.labels[k]) == shared.end()) {
      order_b.push_back(static_cast<int>(k));
    }
  }
  Labeled pa = permute(a, order_a);
  Labeled pb = permute(b, order_b);

  size_t m = 1, k_dim = 1, n = 1;
  for (size_t k = 0; k < free_a; ++k) m *= pa.dims[k];
  for (size_t k = free_a; k < pa.dims.size(); ++k) k_dim *= pa.dims[k];
  for (size_t k = shared.size(); k < pb.dims.size(); ++k) n *= pb.dims[k];

  Labeled out;
  out.labels.assign(pa.labels.begin(), pa.labels.begin() + static_cast<long>(free_a));
  out.dims.assign(pa.dims.begin(), pa.dims.begin() + static_cast<long>(free_a));
  out.labels.insert(out.labels.end(), pb.labels.begin() + static_cast<long>(shared.size()),
                    pb.labels.end());
  out.dims.insert(out.dims.end(), pb.dims.begin() + static_cast<long>(shared.size()), pb.dims.end());
  out.data.assign(m * n, Complex(0.0));
  for (size_t i = 0; i < m; ++i) {
    for (size_t k = 0; k < k_dim; ++k) {
      const Complex lhs = pa.data[i * k_dim + k];
      if (lhs == Complex(0.0)) continue;
      const Complex* row = &pb.data[k * n];
      Complex* dst = &out.data[i * n];
      for (size_t j = 0; j < n; ++j) dst[j] += lhs * row[j];
    }
  }
  return out;
}

Labeled delta(std::vector<int> labels, int dim) {
  Labeled t;
  t.dims.assign(labels.size(), dim);
  t.labels = std::move(labels);
  t.data.assign(t.volume(), Complex(0.0));
  size_t diagonal_step = 0;
  for (size_t k = 0, s = 1; k < t.dims.size(); ++k, s *= static_cast<size_t>(dim)) diagonal_step += s;
  for (int i = 0; i < dim; ++i) t.data[static_cast<size_t>(i) * diagonal_step] = 1.0;
  return t;
}

Tensor evaluate_thin(const Diagram& d, const Model& model) {
  const auto& nodes = d.nodes();
  std::vector<std::vector<int>> in_label(nodes.size());
  std::vector<std::vector<int>> out_label(nodes.size());
  for (size_t n = 0; n < nodes.size(); ++n) {
    in_label[n].resize(nodes[n].dom.size());
    out_label[n].resize(nodes[n].cod.size());
  }
  std::vector<int> boundary_in(d.inputs().size());
  std::vector<int> boundary_out(d.outputs().size());
  std::vector<Labeled> pool;
  int next_label = static_cast<int>(d.edges().size());

  for (size_t k = 0; k < d.edges().size(); ++k) {
    const Edge& e = d.edges()[k];
    int from_label = static_cast<int>(k);
    int to_label = static_cast<int>(k);
    if (e.from.node == kBoundary && e.to.node == kBoundary) {
      // A bare wire still needs a tensor to carry its two open indices.
      from_label = next_label++;
      to_label = next_label++;
      pool.push_back(delta({from_label, to_label}, model.dim(d.inputs()[e.from.index].base)));
    }
    if (e.from.node == kBoundary) {
      boundary_in[e.from.index] = from_label;
    } else {
      out_label[e.from.node][e.from.index] = from_label;
    }
    if (e.to.node == kBoundary) {
      boundary_out[e.to.index] = to_label;
    } else {
      in_label[e.to.node][e.to.index] = to_label;
    }
  }

  Complex scalar = 1.0;
  for (size_t n = 0; n < nodes.size(); ++n) {
    const Generator& g = nodes[n];
    std::vector<int> labels = in_label[n];
    labels.insert(labels.end(), out_label[n].begin(), out_label[n].end());
    std::vector<int> dims = model.dims_of(concat(g.dom, g.cod));
    switch (g.kind) {
      case GeneratorKind::Box: {
        if (!g.payload) throw MissingPayload("box '" + g.name + "' has no payload reference");
        auto it = model.payloads.find(*g.payload);
        if (it == model.payloads.end()) {
          throw MissingPayload("'" + *g.payload + "' (box '" + g.name + "')");
        }
        const Tensor& payload = it->second;
        if (payload.shape() != dims) {
          std::string want, got;
          for (int x : dims) want += std::to_string(x) + " ";
          for (int x : payload.shape()) got += std::to_string(x) + " ";
          throw DimensionMismatch("payload '" + *g.payload + "' has shape [ " + got +
                                  "] but box '" + g.name + "' needs [ " + want + "]");
        }
        Tensor value = g.conjugate ? payload.conj() : payload;
        scalar *= value.scalar();
        if (labels.empty()) {
          scalar *= value.data()[0];
        } else {
          pool.push_back({std::move(labels), std::move(dims), value.data()});
        }
        break;
      }
      case GeneratorKind::Cup:
      case GeneratorKind::Cap:
      case GeneratorKind::Spider:
      case GeneratorKind::Identity:
        pool.push_back(delta(std::move(labels), dims.front()));
        break;
      case GeneratorKind::Swap: {
        // axes: in0 (u), in1 (v), out0 (v), out1 (u)
        Labeled t{std::move(labels), std::move(dims), {}};
        const int du = t.dims[0];
        const int dv = t.dims[1];
        t.data.assign(t.volume(), Complex(0.0));
        for (int a = 0; a < du; ++a) {
          for (int b = 0; b < dv; ++b) {
            size_t offset = ((static_cast<size_t>(a) * dv + b) * dv + b) * du + a;
            t.data[offset] = 1.0;
          }
        }
        pool.push_back(std::move(t));
        break;
      }
    }
  }

  while (pool.size() > 1) {
    size_t best_i = 0, best_j = 1;
    bool best_shared = false;
    size_t best_volume = std::numeric_limits<size_t>::max();
    for (size_t i = 0; i < pool.size(); ++i) {
      for (size_t j = i + 1; j < pool.size(); ++j) {
        bool shares = !shared_labels(pool[i], pool[j]).empty();
        size_t vol = result_volume(pool[i], pool[j]);
        if ((shares && !best_shared) || (shares == best_shared && vol < best_volume)) {
          best_i = i;
          best_j = j;
          best_shared = shares;
          best_volume = vol;
        }
      }
    }
    Labeled merged = contract(pool[best_i], pool[best_j]);
    pool.erase(pool.begin() + static_cast<long>(best_j));
    pool[best_i] = std::move(merged);
  }

  std::vector<int> open = boundary_in;
  open.insert(open.end(), boundary_out.begin(), boundary_out.end());
  if (pool.empty()) return Tensor({}, {Complex(1.0)}, scalar);
  Labeled& result = pool.front();
  std::vector<int> order;
  for (int l : open) {
    order.push_back(static_cast<int>(std::find(result.labels.begin(), result.labels.end(), l) -
                                     result.labels.begin()));
  }
  Labeled final_tensor = permute(result, order);
  return Tensor(std::move(final_tensor.dims), std::move(final_tensor.data), scalar);
}

Eigen::MatrixXcd as_square_matrix(const Tensor& t) {
  const auto r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(t.size()))));
  if (r * r != static_cast<long>(t.size())) {
    throw NotSquare("tensor with " + std::to_string(t.size()) + " entries is not a square matrix");
  }
  auto values = t.values();
  Eigen::MatrixXcd m(r, r);
  for (long i = 0; i < r; ++i) {
    for (long j = 0; j < r; ++j) m(i, j) = values[static_cast<size_t>(i * r + j)];
  }
  return m;
}

}  // namespace

Tensor evaluate(const Diagram& d, const Model& model) {
  if (model.doubling == Doubling::Thick) return evaluate_thin(double_diagram(d), model);
  return evaluate_thin(d, model);
}

Diagram double_diagram(const Diagram& d) {
  auto doubled = [](const TypeList& types) {
    TypeList out;
    out.reserve(types.size() * 2);
    for (const auto& t : types) {
      out.push_back(t);
      out.push_back(t);
    }
    return out;
  };
  DiagramBuilder b(d.types(), doubled(d.inputs()), doubled(d.outputs()));
  const auto& nodes = d.nodes();
  std::vector<int> plain(nodes.size()), twin(nodes.size(), -1);
  for (size_t n = 0; n < nodes.size(); ++n) {
    const Generator& g = nodes[n];
    if (g.kind == GeneratorKind::Box && g.mixed) {
      Generator thick = g;
      thick.dom = doubled(g.dom);
      thick.cod = doubled(g.cod);
      plain[n] = b.add(std::move(thick));
      continue;
    }
    plain[n] = b.add(g);
    Generator conj = g;
    if (conj.kind == GeneratorKind::Box) conj.conjugate = !conj.conjugate;
    twin[n] = b.add(std::move(conj));
  }
  // copy 0 is the plain wire, copy 1 its conjugate partner
  auto map_port = [&](const Port& p, int copy) -> Port {
    if (p.node == kBoundary || twin[p.node] < 0) {
      int node = p.node == kBoundary ? kBoundary : plain[p.node];
      return {node, 2 * p.index + copy};
    }
    return {copy == 0 ? plain[p.node] : twin[p.node], p.index};
  };
  for (const Edge& e : d.edges()) {
    b.connect(map_port(e.from, 0), map_port(e.to, 0));
    b.connect(map_port(e.from, 1), map_port(e.to, 1));
  }
  return b.build();
}

Tensor density_matrix(const Tensor& t) {
  if (t.rank() == 2) {
    if (t.shape()[0] != t.shape()[1]) throw NotSquare("rank-2 tensor is not square");
    return t.folded();
  }
  if (t.rank() == 0 || t.rank() % 2 != 0) {
    throw NotSquare("doubled tensor must have an even number of indices");
  }
  const int pairs = t.rank() / 2;
  std::vector<int> row_dims;
  for (int k = 0; k < pairs; ++k) {
    if (t.shape()[2 * k] != t.shape()[2 * k + 1]) {
      throw NotSquare("index pair " + std::to_string(k) + " has unequal dimensions");
    }
    row_dims.push_back(t.shape()[2 * k]);
  }
  Labeled in{{}, t.shape(), t.values()};
  in.labels.resize(t.shape().size());
  std::iota(in.labels.begin(), in.labels.end(), 0);
  std::vector<int> order;
  for (int k = 0; k < pairs; ++k) order.push_back(2 * k);
  for (int k = 0; k < pairs; ++k) order.push_back(2 * k + 1);
  Labeled out = permute(in, order);
  int side = 1;
  for (int x : row_dims) side *= x;
  return Tensor({side, side}, std::move(out.data));
}

double entropy(const Tensor& t) {
  Eigen::MatrixXcd rho = as_square_matrix(t);
  const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw NotHermitian("matrix differs from its adjoint");
  }
  const double trace = rho.trace().real();
  if (!(trace > 0.0)) throw ZeroNorm("density matrix trace is not positive");
  rho /= trace;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (long i = 0; i < solver.eigenvalues().size(); ++i) {
    double lambda = solver.eigenvalues()[i];
    if (lambda > 1e-12) s -= lambda * std::log2(lambda);
  }
  return s;
}

double similarity(const Tensor& t1, const Tensor& t2, SimilarityKind kind) {
  if (t1.shape() != t2.shape()) throw ShapeMismatch("similarity needs equal shapes");
  if (t1.norm() == 0.0 || t2.norm() == 0.0) throw ZeroNorm("similarity of a zero tensor");
  if (kind == SimilarityKind::Cosine) {
    auto a = t1.values();
    auto b = t2.values();
    Complex inner = 0.0;
    for (size_t i = 0; i < a.size(); ++i) inner += std::conj(a[i]) * b[i];
    return std::min(1.0, std::abs(inner) / (t1.norm() * t2.norm()));
  }
  Eigen::MatrixXcd r1 = as_square_matrix(t1);
  Eigen::MatrixXcd r2 = as_square_matrix(t2);
  const Complex denom = r1.trace() * r2.trace();
  if (std::abs(denom) == 0.0) throw ZeroNorm("density matrix with zero trace");
  return ((r1 * r2).trace() / denom).real();
}

int operator_rank(const Tensor& state, double tolerance) {
  if (state.rank() < 2) throw DimensionMismatch("operator rank needs at least two indices");
  const long rows = state.shape()[0];
  const long cols = static_cast<long>(state.size()) / rows;
  auto values = state.values();
  Eigen::MatrixXcd m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) m(i, j) = values[static_cast<size_t>(i * cols + j)];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = tolerance * std::max(1.0, sv[0]);
  int rank = 0;
  for (long i = 0; i < sv.size(); ++i) rank += sv[i] > cutoff ? 1 : 0;
  return rank;
}

}  // namespace anticart
