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

#include "anticart/random.hpp"

#include <Eigen/Dense>

namespace anticart {

namespace {

size_t volume(const std::vector<int>& shape) {
  size_t n = 1;
  for (int d : shape) n *= static_cast<size_t>(d);
  return n;
}

}  // namespace

Tensor random_tensor(const std::vector<int>& shape, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> data(volume(shape));
  for (auto& x : data) {
    double re = normal(rng);
    double im = normal(rng);
    x = {re, im};
  }
  return Tensor(shape, std::move(data));
}

Tensor random_real_tensor(const std::vector<int>& shape, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> data(volume(shape));
  for (auto& x : data) x = normal(rng);
  return Tensor(shape, std::move(data));
}

std::vector<Complex> random_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      double re = normal(rng);
      double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  std::vector<Complex> out(static_cast<size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) out[static_cast<size_t>(i) * dim + j] = q(i, j);
  }
  return out;
}

}  // namespace anticart
